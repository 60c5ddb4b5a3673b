#pragma once

// Independent verification path: literal term-by-term summation in exact
// rational arithmetic, with exact Bernoulli numbers on the right-hand side.

#include <cstdint>
#include <functional>
#include <vector>

#include "hcong/congruence_suite.hpp"

namespace hcong {

namespace exact {

/// H_{k,m} for k = 0..p-1 as running sums of 1/k^m.
std::vector<BigRational> harmonics(uint64_t p, long order);

/// sum_{k=1}^{last} term(k)
BigRational single_sum(uint64_t last, const std::function<BigRational(long)> &term);

/// sum over 1 <= j (<|<=) k <= p-1 of w(j) / (j^a k^b), accumulated over a
/// common denominator lcm(1..p-1)^(a+b).
BigRational double_sum(uint64_t p, int a, int b, const std::function<BigInt(long)> &w, Ordering ordering);

/// sum over 1 <= i (<|<=) j (<|<=) k <= p-1 of w(i) / (i^a j^b k^c).
BigRational triple_sum(uint64_t p, int a, int b, int c, const std::function<BigInt(long)> &w, Ordering ordering);

/// coeff * p^{p_factor} * B_{p-1-offset}
BigRational bernoulli_multiple(const ExactContext &ec, const BigRational &coeff, int64_t offset, int p_factor);

Residue reduce(const ExactContext &ec, int exponent, const BigRational &q);

} // namespace exact

inline constexpr uint64_t kDefaultOracleBound = 97;
inline constexpr uint64_t kDefaultOracleTripleBound = 31;

class Oracle {
public:
	explicit Oracle(uint64_t bound = kDefaultOracleBound, uint64_t triple_bound = kDefaultOracleTripleBound);

	uint64_t bound() const noexcept { return bound_; }
	uint64_t triple_bound() const noexcept { return triple_bound_; }

	/// Throws OracleBoundExceeded above the bound (or the triple-sum bound
	/// for cubic cases), std::invalid_argument for composite p.
	CongruenceReport evaluate(const CongruenceCase &c, uint64_t p) const;

private:
	uint64_t bound_;
	uint64_t triple_bound_;
	BernoulliSeq bern_;
};

/// One-shot convenience wrapper around a default Oracle.
CongruenceReport oracle_evaluate(const CongruenceCase &c, uint64_t p);

} // namespace hcong
