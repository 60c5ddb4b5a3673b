#pragma once

// Arithmetic in Z/pZ and Z/p^2Z for primes 5 <= p < 2^32.

#include <cstdint>
#include <string>
#include <vector>

#include "hcong/exact_arith.hpp"

namespace hcong {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

/// An odd prime p >= 5 with its modulus M = p^exponent, exponent in {1, 2}.
class Modulus {
public:
	/// Throws std::invalid_argument for composite p, p < 5, p >= 2^32 or a bad exponent.
	Modulus(uint64_t p, int exponent);

	uint64_t prime() const noexcept { return p_; }
	int exponent() const noexcept { return exponent_; }
	uint64_t value() const noexcept { return m_; }

	friend bool operator==(const Modulus &a, const Modulus &b) noexcept { return a.m_ == b.m_; }

private:
	uint64_t p_;
	int exponent_;
	uint64_t m_;
};

/// Canonical representative in [0, M). Operations on residues of different
/// moduli throw std::logic_error.
class Residue {
public:
	/// Reduces v mod M.
	Residue(uint64_t v, const Modulus &mod) : v_(v % mod.value()), mod_(mod) {}

	static Residue from_signed(int64_t v, const Modulus &mod);
	static Residue zero(const Modulus &mod) { return Residue(0, mod); }
	static Residue one(const Modulus &mod) { return Residue(1, mod); }

	uint64_t value() const noexcept { return v_; }
	const Modulus &modulus() const noexcept { return mod_; }
	bool is_zero() const noexcept { return v_ == 0; }

	Residue &operator+=(const Residue &o);
	Residue &operator-=(const Residue &o);
	Residue &operator*=(const Residue &o);

	friend Residue operator+(Residue a, const Residue &b) { return a += b; }
	friend Residue operator-(Residue a, const Residue &b) { return a -= b; }
	friend Residue operator*(Residue a, const Residue &b) { return a *= b; }
	Residue operator-() const;

	friend bool operator==(const Residue &a, const Residue &b) noexcept
	{
		return a.mod_ == b.mod_ && a.v_ == b.v_;
	}

	/// Image under Z/p^2Z -> Z/pZ (identity if already mod p).
	Residue reduce_to(const Modulus &target) const;

	std::string to_string() const { return std::to_string(v_); }

private:
	void check_same(const Residue &o) const;

	uint64_t v_;
	Modulus mod_;
};

/// Throws NotInvertible when p | a.
Residue inverse(const Residue &a);

Residue pow_mod(Residue a, uint64_t e);

/// num * den^{-1} mod M. Throws PDividesDenominator when p | den.
Residue reduce_rational(const BigRational &q, const Modulus &mod);

/// table[k] = k^{-1} mod M for k = 1..p-1 (table[0] = 0), using prefix
/// products and a single extended-Euclid inversion.
std::vector<Residue> batch_inverses(const Modulus &mod);

} // namespace hcong
