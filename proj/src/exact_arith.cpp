#include "hcong/exact_arith.hpp"

#include <ostream>
#include <stdexcept>

namespace hcong {

BigRational::BigRational(const BigInt &num, const BigInt &den)
{
	if (sgn(den) == 0)
		throw std::domain_error("zero denominator");
	q_ = mpq_class(num, den);
	q_.canonicalize();
}

BigRational BigRational::inverse() const
{
	if (is_zero())
		throw std::domain_error("inverse of zero");
	return BigRational(mpq_class(1 / q_));
}

BigRational &BigRational::operator+=(const BigRational &o)
{
	q_ += o.q_;
	return *this;
}

BigRational &BigRational::operator-=(const BigRational &o)
{
	q_ -= o.q_;
	return *this;
}

BigRational &BigRational::operator*=(const BigRational &o)
{
	q_ *= o.q_;
	return *this;
}

BigRational &BigRational::operator/=(const BigRational &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero");
	q_ /= o.q_;
	return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

std::string BigRational::to_string() const
{
	if (q_.get_den() == 1)
		return q_.get_num().get_str();
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const BigRational &q) { return os << q.to_string(); }

BigRational pow(const BigRational &base, long exponent)
{
	if (exponent < 0)
		return pow(base.inverse(), -exponent);
	BigInt num, den;
	mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
	mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
	return BigRational(num, den);
}

BigInt binomial(long n, long k)
{
	if (n < 0)
		throw std::invalid_argument("binomial: negative n");
	if (k < 0 || k > n)
		return 0;
	BigInt r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return r;
}

const BigRational &BernoulliSeq::operator[](long j) const
{
	if (j < 0 || j > cap())
		throw std::out_of_range("Bernoulli index " + std::to_string(j) + " beyond cap " +
		                        std::to_string(cap()));
	return values_[static_cast<size_t>(j)];
}

BernoulliSeq bernoulli_exact(long cap)
{
	if (cap < 0)
		throw std::invalid_argument("bernoulli_exact: negative cap");
	std::vector<BigRational> b;
	b.reserve(static_cast<size_t>(cap) + 1);
	b.emplace_back(1);

	// row holds C(m+1, j) for j = 0..m+1
	std::vector<BigInt> row{1, 1};
	for (long m = 1; m <= cap; ++m) {
		std::vector<BigInt> next(row.size() + 1);
		next.front() = 1;
		next.back() = 1;
		for (size_t j = 1; j < row.size(); ++j)
			next[j] = row[j - 1] + row[j];
		row = std::move(next);

		BigRational acc;
		for (long j = 0; j < m; ++j)
			if (!b[static_cast<size_t>(j)].is_zero())
				acc += BigRational(row[static_cast<size_t>(j)]) * b[static_cast<size_t>(j)];
		b.push_back(-acc / BigRational(m + 1));
	}
	return BernoulliSeq(std::move(b));
}

BigRational harmonic_exact(long n, long m)
{
	if (m <= 0)
		throw std::invalid_argument("harmonic_exact: order must be positive");
	if (n < 0)
		throw std::invalid_argument("harmonic_exact: negative n");
	BigRational h;
	for (long k = 1; k <= n; ++k)
		h += pow(BigRational(k), -m);
	return h;
}

BigRational faulhaber_sum(long k, long n, const BernoulliSeq &bern)
{
	if (k < 1 || n < 0)
		throw std::invalid_argument("faulhaber_sum: need k >= 1 and n >= 0");
	if (bern.cap() < n)
		throw std::invalid_argument("faulhaber_sum: Bernoulli cap " + std::to_string(bern.cap()) +
		                            " below power " + std::to_string(n));
	BigRational acc;
	for (long j = 0; j <= n; ++j) {
		if (bern[j].is_zero())
			continue;
		acc += BigRational(binomial(n + 1, j)) * bern[j] * pow(BigRational(k), n + 1 - j);
	}
	return acc / BigRational(n + 1);
}

BigInt s_coefficient(long n)
{
	if (n <= 0)
		throw std::invalid_argument("s_coefficient: n must be positive");
	return binomial(6 * n + 1, 2 * n - 1) + n;
}

IdentityCheck identity_hockey_stick(long m, long k)
{
	BigInt lhs = 0;
	for (long n = 1; n <= m; ++n)
		lhs += binomial(n - 1, k - 1);
	BigInt rhs = binomial(m, k);
	return {lhs == rhs, BigRational(lhs), BigRational(rhs)};
}

IdentityCheck identity_binomial_harmonic(long n)
{
	BigRational lhs;
	BigRational h;
	for (long k = 1; k <= n; ++k) {
		h += BigRational(1, k);
		BigRational term = BigRational(binomial(n, k), k) * h;
		if (k % 2 == 1)
			lhs += term;
		else
			lhs -= term;
	}
	BigRational rhs = harmonic_exact(n, 2);
	return {lhs == rhs, lhs, rhs};
}

} // namespace hcong
