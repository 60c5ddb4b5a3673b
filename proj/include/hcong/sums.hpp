#pragma once

// O(p) evaluation of the single, double and triple sums over 1..p-1 that
// appear on the left of the congruences. Everything is computed mod p^2;
// callers reduce to mod p where the statement only holds mod p.

#include <cstdint>
#include <vector>

#include "hcong/tables.hpp"

namespace hcong {

/// w_k = sum_r coeff_r * (num_r/den_r)^k, k >= 1.
class Weight {
public:
	struct Geometric {
		int64_t coeff;
		int64_t num;
		int64_t den = 1;
	};

	Weight() = default;
	explicit Weight(std::vector<Geometric> terms) : terms_(std::move(terms)) {}

	static Weight one() { return Weight({{1, 1}}); }
	/// (-1)^k
	static Weight alternating() { return Weight({{1, -1}}); }
	/// 2^{-k}
	static Weight half_power() { return Weight({{1, 1, 2}}); }
	/// 2^k
	static Weight two_power() { return Weight({{1, 2}}); }
	/// base^k for an integer base (0^k = 0 for k >= 1)
	static Weight geometric(int64_t base) { return Weight({{1, base}}); }

	friend Weight operator-(const Weight &a, const Weight &b);

	const std::vector<Geometric> &terms() const { return terms_; }

	/// w_0..w_{p-1} mod p^2. Throws PDividesDenominator if p divides a base denominator.
	std::vector<Residue> sequence(const PrimeContext &ctx) const;

private:
	std::vector<Geometric> terms_;
};

enum class Ordering { Strict, Weak };
enum class Range { Full, Half };

/// sum_k w_k * k^{-power} * H_{k,order}^{harmonic_exponent}; a negative power
/// means k^{|power|}. Half range stops at (p-1)/2.
struct SingleSumSpec {
	Weight weight = Weight::one();
	int power = 0;
	int harmonic_order = 0;
	int harmonic_exponent = 0;
	Range range = Range::Full;
};

/// sum over 1 <= j (<|<=) k <= p-1 of w_j / (j^j_power k^k_power).
struct DoubleSumSpec {
	Weight weight = Weight::one();
	int j_power = 1;
	int k_power = 1;
	Ordering ordering = Ordering::Strict;
};

/// sum over 1 <= i (<|<=) j (<|<=) k <= p-1 of w_i / (i^a j^b k^c).
struct TripleSumSpec {
	Weight weight = Weight::one();
	int i_power = 1;
	int j_power = 1;
	int k_power = 1;
	Ordering ordering = Ordering::Weak;
};

/// t_k = k^{-power} mod p^2 for k = 0..p-1 (t_0 unused).
std::vector<Residue> power_table(const PrimeContext &ctx, int power);

Residue lhs_single_sum(const PrimeContext &ctx, const SingleSumSpec &spec);

/// Prefix sums A_k = sum_{j before k} w_j/j^a, then sum_k A_k/k^b.
Residue lhs_double_sum(const PrimeContext &ctx, const DoubleSumSpec &spec);

/// Nested prefix sums A_j = sum_i w_i/i^a, B_k = sum_j A_j/j^b, sum_k B_k/k^c.
Residue lhs_triple_sum(const PrimeContext &ctx, const TripleSumSpec &spec);

} // namespace hcong
