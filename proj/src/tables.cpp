#include "hcong/tables.hpp"

#include <stdexcept>

#include "hcong/errors.hpp"

namespace hcong {

std::vector<Residue> bernoulli_mod_p(uint64_t p)
{
	const Modulus mod(p, 1);
	const uint64_t cap = p - 3;
	std::vector<Residue> b(cap + 1, Residue::zero(mod));
	b[0] = Residue::one(mod);

	// row[j] = C(m+1, j) mod p; m+1 <= p-2 so no entry vanishes spuriously
	std::vector<Residue> row(cap + 2, Residue::zero(mod));
	row[0] = row[1] = Residue::one(mod);
	for (uint64_t m = 1; m <= cap; ++m) {
		for (uint64_t j = m + 1; j >= 1; --j)
			row[j] += row[j - 1];

		Residue acc = Residue::zero(mod);
		for (uint64_t j = 0; j < m; ++j)
			if (!b[j].is_zero())
				acc += row[j] * b[j];
		b[m] = -acc * inverse(Residue(m + 1, mod));
	}
	return b;
}

PrimeContext::PrimeContext(uint64_t p, const std::set<int> &orders)
    : mod2_(p, 2), mod1_(p, 1), inv_(batch_inverses(mod2_)),
      pow_half_(p, Residue::one(mod2_)), neg_(p, Residue::one(mod2_)), bern_(bernoulli_mod_p(p))
{
	if (orders.empty())
		throw std::invalid_argument("build_context: no harmonic orders requested");
	for (int m : orders) {
		if (m < 1)
			throw std::invalid_argument("build_context: harmonic order must be >= 1");
		std::vector<Residue> h(p, Residue::zero(mod2_));
		for (uint64_t k = 1; k < p; ++k)
			h[k] = h[k - 1] + pow_mod(inv_[k], static_cast<uint64_t>(m));
		harmonic_.emplace(m, std::move(h));
	}
	const Residue half = inv_[2];
	for (uint64_t k = 1; k < p; ++k) {
		pow_half_[k] = pow_half_[k - 1] * half;
		neg_[k] = -neg_[k - 1];
	}
}

const std::vector<Residue> &PrimeContext::harmonic(int order) const
{
	auto it = harmonic_.find(order);
	if (it == harmonic_.end())
		throw MissingOrder(order);
	return it->second;
}

std::set<int> PrimeContext::orders() const
{
	std::set<int> out;
	for (const auto &[m, table] : harmonic_)
		out.insert(m);
	return out;
}

PrimeContext build_context(uint64_t p, const std::set<int> &orders) { return PrimeContext(p, orders); }

} // namespace hcong
