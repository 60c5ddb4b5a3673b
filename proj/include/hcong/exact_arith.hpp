#pragma once

// Exact integer and rational arithmetic, plus the exact constructions
// (binomials, Bernoulli numbers, harmonic numbers, power sums) used as the
// independent oracle for the residue pipeline.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hcong {

using BigInt = mpz_class;

/// Reduced fraction num/den with den >= 1; zero is 0/1.
class BigRational {
public:
	BigRational() = default;
	BigRational(long v) : q_(v) {}
	BigRational(const BigInt &v) : q_(v) {}
	/// Throws std::domain_error on a zero denominator.
	BigRational(const BigInt &num, const BigInt &den);

	BigInt numerator() const { return q_.get_num(); }
	BigInt denominator() const { return q_.get_den(); }
	bool is_zero() const { return sgn(q_) == 0; }
	int sign() const { return sgn(q_); }

	/// Throws std::domain_error for zero.
	BigRational inverse() const;

	BigRational &operator+=(const BigRational &o);
	BigRational &operator-=(const BigRational &o);
	BigRational &operator*=(const BigRational &o);
	BigRational &operator/=(const BigRational &o);

	friend BigRational operator+(BigRational a, const BigRational &b) { return a += b; }
	friend BigRational operator-(BigRational a, const BigRational &b) { return a -= b; }
	friend BigRational operator*(BigRational a, const BigRational &b) { return a *= b; }
	friend BigRational operator/(BigRational a, const BigRational &b) { return a /= b; }
	BigRational operator-() const;

	friend bool operator==(const BigRational &a, const BigRational &b) { return a.q_ == b.q_; }

	/// "num/den", or just "num" when den = 1.
	std::string to_string() const;

private:
	explicit BigRational(mpq_class q) : q_(std::move(q)) {}
	mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const BigRational &q);

/// Integer power of a rational; negative exponents invert.
BigRational pow(const BigRational &base, long exponent);

/// C(n, k); zero for k < 0 or k > n. Throws std::invalid_argument for n < 0.
BigInt binomial(long n, long k);

/// Bernoulli numbers B_0..B_cap with B_1 = -1/2.
class BernoulliSeq {
public:
	explicit BernoulliSeq(std::vector<BigRational> values) : values_(std::move(values)) {}

	long cap() const { return static_cast<long>(values_.size()) - 1; }
	/// Throws std::out_of_range beyond cap.
	const BigRational &operator[](long j) const;
	const std::vector<BigRational> &values() const { return values_; }

private:
	std::vector<BigRational> values_;
};

inline constexpr long kDefaultBernoulliCap = 200;

/// Solves sum_{j=0}^{m} C(m+1, j) B_j = 0 for B_m, m = 1..cap.
BernoulliSeq bernoulli_exact(long cap);

/// H_{n,m} = sum_{0<k<=n} 1/k^m. Throws std::invalid_argument for m <= 0 or n < 0.
BigRational harmonic_exact(long n, long m);

/// sum_{j=0}^{k-1} j^n via (1/(n+1)) sum_j C(n+1, j) B_j k^{n+1-j}.
/// Throws std::invalid_argument if bern.cap() < n, k < 1 or n < 0.
BigRational faulhaber_sum(long k, long n, const BernoulliSeq &bern);

/// s(n) = C(6n+1, 2n-1) + n. Throws std::invalid_argument for n <= 0.
BigInt s_coefficient(long n);

struct IdentityCheck {
	bool pass;
	BigRational lhs;
	BigRational rhs;
};

/// sum_{n=1}^{m} C(n-1, k-1) against C(m, k).
IdentityCheck identity_hockey_stick(long m, long k);

/// sum_{k=1}^{n} C(n,k) (-1)^{k-1}/k H_k against H_{n,2}.
IdentityCheck identity_binomial_harmonic(long n);

} // namespace hcong
