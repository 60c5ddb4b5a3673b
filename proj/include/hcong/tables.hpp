#pragma once

// Per-prime tables that let each congruence case evaluate in O(p).

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hcong/residue_ring.hpp"

namespace hcong {

/// B_j mod p for j = 0..p-3 (B_1 = -1/2, odd j >= 3 are zero), from the
/// Bernoulli recurrence run entirely in Z/pZ with incremental binomial rows.
std::vector<Residue> bernoulli_mod_p(uint64_t p);

/// Immutable after construction; share freely across threads.
class PrimeContext {
public:
	PrimeContext(uint64_t p, const std::set<int> &orders);

	uint64_t prime() const noexcept { return mod2_.prime(); }
	const Modulus &mod2() const noexcept { return mod2_; }
	const Modulus &mod1() const noexcept { return mod1_; }
	const Modulus &modulus(int exponent) const noexcept { return exponent == 2 ? mod2_ : mod1_; }

	/// k^{-1} mod p^2, k = 1..p-1.
	const std::vector<Residue> &inv() const noexcept { return inv_; }
	/// H_{k,m} mod p^2 for k = 0..p-1. Throws MissingOrder.
	const std::vector<Residue> &harmonic(int order) const;
	bool has_order(int order) const { return harmonic_.count(order) != 0; }
	std::set<int> orders() const;
	/// 2^{-k} mod p^2, k = 0..p-1.
	const std::vector<Residue> &pow_half() const noexcept { return pow_half_; }
	/// (-1)^k mod p^2, k = 0..p-1.
	const std::vector<Residue> &neg() const noexcept { return neg_; }
	/// B_j mod p, j = 0..p-3.
	const std::vector<Residue> &bern() const noexcept { return bern_; }

private:
	Modulus mod2_;
	Modulus mod1_;
	std::vector<Residue> inv_;
	std::map<int, std::vector<Residue>> harmonic_;
	std::vector<Residue> pow_half_;
	std::vector<Residue> neg_;
	std::vector<Residue> bern_;
};

/// Throws std::invalid_argument for an empty order set or an order < 1,
/// and propagates Modulus construction errors.
PrimeContext build_context(uint64_t p, const std::set<int> &orders);

} // namespace hcong
