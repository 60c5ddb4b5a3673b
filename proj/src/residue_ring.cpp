#include "hcong/residue_ring.hpp"

#include <stdexcept>

#include "hcong/errors.hpp"

namespace hcong {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
	return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m)
{
	uint64_t r = 1 % m;
	a %= m;
	while (e) {
		if (e & 1)
			r = mulmod(r, a, m);
		a = mulmod(a, a, m);
		e >>= 1;
	}
	return r;
}

// Returns x with a*x = 1 mod m, or 0 when gcd(a, m) != 1.
uint64_t inverse_euclid(uint64_t a, uint64_t m)
{
	int64_t t = 0, new_t = 1;
	uint64_t r = m, new_r = a % m;
	while (new_r != 0) {
		uint64_t q = r / new_r;
		int64_t tmp_t = t - static_cast<int64_t>(q) * new_t;
		t = new_t;
		new_t = tmp_t;
		uint64_t tmp_r = r - q * new_r;
		r = new_r;
		new_r = tmp_r;
	}
	if (r != 1)
		return 0;
	return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(m)) : static_cast<uint64_t>(t);
}

} // namespace

bool is_prime(uint64_t n)
{
	if (n < 2)
		return false;
	for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
		if (n % q == 0)
			return n == q;
	}
	uint64_t d = n - 1;
	int s = 0;
	while ((d & 1) == 0) {
		d >>= 1;
		++s;
	}
	// the first twelve prime bases are deterministic below 3.1e23
	for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
		uint64_t x = powmod(a, d, n);
		if (x == 1 || x == n - 1)
			continue;
		bool composite = true;
		for (int r = 1; r < s; ++r) {
			x = mulmod(x, x, n);
			if (x == n - 1) {
				composite = false;
				break;
			}
		}
		if (composite)
			return false;
	}
	return true;
}

Modulus::Modulus(uint64_t p, int exponent) : p_(p), exponent_(exponent), m_(p)
{
	if (exponent != 1 && exponent != 2)
		throw std::invalid_argument("modulus exponent must be 1 or 2");
	if (p < 5)
		throw std::invalid_argument("prime must be at least 5, got " + std::to_string(p));
	if (p >= (uint64_t{1} << 32))
		throw std::invalid_argument("prime must be below 2^32");
	if (!is_prime(p))
		throw std::invalid_argument(std::to_string(p) + " is not prime");
	if (exponent == 2)
		m_ = p * p;
}

Residue Residue::from_signed(int64_t v, const Modulus &mod)
{
	uint64_t m = mod.value();
	if (v >= 0)
		return Residue(static_cast<uint64_t>(v), mod);
	uint64_t mag = (~static_cast<uint64_t>(v) + 1) % m;
	return Residue(mag == 0 ? 0 : m - mag, mod);
}

void Residue::check_same(const Residue &o) const
{
	if (!(mod_ == o.mod_))
		throw std::logic_error("mixed-modulus arithmetic: " + std::to_string(mod_.value()) + " vs " +
		                       std::to_string(o.mod_.value()));
}

Residue &Residue::operator+=(const Residue &o)
{
	check_same(o);
	uint64_t m = mod_.value();
	v_ = v_ >= m - o.v_ ? v_ - (m - o.v_) : v_ + o.v_;
	return *this;
}

Residue &Residue::operator-=(const Residue &o)
{
	check_same(o);
	v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (mod_.value() - o.v_);
	return *this;
}

Residue &Residue::operator*=(const Residue &o)
{
	check_same(o);
	v_ = mulmod(v_, o.v_, mod_.value());
	return *this;
}

Residue Residue::operator-() const { return Residue(v_ == 0 ? 0 : mod_.value() - v_, mod_); }

Residue Residue::reduce_to(const Modulus &target) const
{
	if (target.prime() != mod_.prime() || target.exponent() > mod_.exponent())
		throw std::logic_error("cannot reduce mod " + std::to_string(mod_.value()) + " to mod " +
		                       std::to_string(target.value()));
	return Residue(v_, target);
}

Residue inverse(const Residue &a)
{
	uint64_t x = inverse_euclid(a.value(), a.modulus().value());
	if (x == 0)
		throw NotInvertible(std::to_string(a.value()) + " is not invertible mod " +
		                    std::to_string(a.modulus().value()));
	return Residue(x, a.modulus());
}

Residue pow_mod(Residue a, uint64_t e) { return Residue(powmod(a.value(), e, a.modulus().value()), a.modulus()); }

Residue reduce_rational(const BigRational &q, const Modulus &mod)
{
	BigInt m = static_cast<unsigned long>(mod.value());
	BigInt p = static_cast<unsigned long>(mod.prime());
	BigInt den = q.denominator();
	if (den % p == 0)
		throw PDividesDenominator(std::to_string(mod.prime()) + " divides denominator of " + q.to_string());
	BigInt num = q.numerator();
	// mpz mod is always nonnegative for a positive divisor
	BigInt num_r, den_r;
	mpz_mod(num_r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
	mpz_mod(den_r.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
	Residue n(num_r.get_ui(), mod);
	Residue d(den_r.get_ui(), mod);
	return n * inverse(d);
}

std::vector<Residue> batch_inverses(const Modulus &mod)
{
	const uint64_t p = mod.prime();
	std::vector<Residue> prefix(p, Residue::one(mod));
	for (uint64_t k = 1; k < p; ++k)
		prefix[k] = prefix[k - 1] * Residue(k, mod);

	std::vector<Residue> table(p, Residue::zero(mod));
	Residue running = inverse(prefix[p - 1]);
	for (uint64_t k = p - 1; k >= 1; --k) {
		table[k] = running * prefix[k - 1];
		running *= Residue(k, mod);
	}
	return table;
}

} // namespace hcong
