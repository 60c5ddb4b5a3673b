#include "hcong/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "hcong/errors.hpp"

namespace hcong {

namespace exact {

namespace {

BigInt lcm_upto(uint64_t n)
{
	BigInt l = 1;
	for (uint64_t k = 2; k <= n; ++k) {
		BigInt kk = static_cast<unsigned long>(k);
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kk.get_mpz_t());
	}
	return l;
}

BigInt ipow(const BigInt &base, int e)
{
	BigInt r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
	return r;
}

// f[k] = L^e / k^e for k = 1..p-1
std::vector<BigInt> scaled_reciprocals(uint64_t p, const BigInt &l, int e)
{
	const BigInt le = ipow(l, e);
	std::vector<BigInt> f(p);
	for (uint64_t k = 1; k < p; ++k) {
		BigInt ke = ipow(BigInt(static_cast<unsigned long>(k)), e);
		mpz_divexact(f[k].get_mpz_t(), le.get_mpz_t(), ke.get_mpz_t());
	}
	return f;
}

} // namespace

std::vector<BigRational> harmonics(uint64_t p, long order)
{
	std::vector<BigRational> h(p);
	for (uint64_t k = 1; k < p; ++k)
		h[k] = h[k - 1] + pow(BigRational(static_cast<long>(k)), -order);
	return h;
}

BigRational single_sum(uint64_t last, const std::function<BigRational(long)> &term)
{
	BigRational acc;
	for (uint64_t k = 1; k <= last; ++k)
		acc += term(static_cast<long>(k));
	return acc;
}

BigRational double_sum(uint64_t p, int a, int b, const std::function<BigInt(long)> &w, Ordering ordering)
{
	const BigInt l = lcm_upto(p - 1);
	const auto fj = scaled_reciprocals(p, l, a);
	const auto fk = scaled_reciprocals(p, l, b);
	BigInt total = 0;
	for (uint64_t k = 1; k < p; ++k) {
		const uint64_t jmax = ordering == Ordering::Weak ? k : k - 1;
		for (uint64_t j = 1; j <= jmax; ++j)
			total += w(static_cast<long>(j)) * fj[j] * fk[k];
	}
	return BigRational(total, ipow(l, a + b));
}

BigRational triple_sum(uint64_t p, int a, int b, int c, const std::function<BigInt(long)> &w, Ordering ordering)
{
	const BigInt l = lcm_upto(p - 1);
	const auto fi = scaled_reciprocals(p, l, a);
	const auto fj = scaled_reciprocals(p, l, b);
	const auto fk = scaled_reciprocals(p, l, c);
	const uint64_t shift = ordering == Ordering::Weak ? 0 : 1;
	std::vector<BigInt> wi(p);
	for (uint64_t i = 1; i < p; ++i)
		wi[i] = w(static_cast<long>(i)) * fi[i];

	BigInt total = 0;
	for (uint64_t k = 1; k < p; ++k)
		for (uint64_t j = 1; j + shift <= k; ++j) {
			BigInt jk = fj[j] * fk[k];
			for (uint64_t i = 1; i + shift <= j; ++i)
				total += wi[i] * jk;
		}
	return BigRational(total, ipow(l, a + b + c));
}

BigRational bernoulli_multiple(const ExactContext &ec, const BigRational &coeff, int64_t offset, int p_factor)
{
	const long index = static_cast<long>(ec.p) - 1 - offset;
	BigRational r = coeff * ec.bern[index];
	if (p_factor)
		r *= BigRational(static_cast<long>(ec.p));
	return r;
}

Residue reduce(const ExactContext &ec, int exponent, const BigRational &q)
{
	return reduce_rational(q, Modulus(ec.p, exponent));
}

} // namespace exact

Oracle::Oracle(uint64_t bound, uint64_t triple_bound)
    : bound_(bound), triple_bound_(triple_bound),
      bern_(bernoulli_exact(std::max<long>(kDefaultBernoulliCap, static_cast<long>(bound))))
{
}

CongruenceReport Oracle::evaluate(const CongruenceCase &c, uint64_t p) const
{
	if (p > bound_)
		throw OracleBoundExceeded("prime " + std::to_string(p) + " above oracle bound " + std::to_string(bound_));
	if (c.family->triple_sum && p > triple_bound_)
		throw OracleBoundExceeded("prime " + std::to_string(p) + " above triple-sum oracle bound " +
		                          std::to_string(triple_bound_));
	const Modulus mod(p, c.family->exponent);

	CongruenceReport r;
	r.prime = p;
	r.case_id = c.id();
	r.params = c.params_string();
	r.param = c.param;
	r.modulus = mod.value();

	const auto start = std::chrono::steady_clock::now();
	if (auto why = c.family->skip_reason(p, c.param_value())) {
		r.verdict = Verdict::Skip;
		r.reason = *why;
	} else {
		try {
			const Sides s = c.family->exact(ExactContext{p, bern_}, c.param_value());
			r.lhs = s.lhs.value();
			r.rhs = s.rhs.value();
			r.verdict = s.lhs == s.rhs ? Verdict::Pass : Verdict::Fail;
		} catch (const PDividesDenominator &e) {
			r.verdict = Verdict::Fail;
			r.reason = e.what();
		}
	}
	r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
	return r;
}

CongruenceReport oracle_evaluate(const CongruenceCase &c, uint64_t p)
{
	static const Oracle oracle;
	return oracle.evaluate(c, p);
}

} // namespace hcong
