#include "hcong/sums.hpp"

namespace hcong {

Weight operator-(const Weight &a, const Weight &b)
{
	std::vector<Weight::Geometric> terms = a.terms_;
	for (Weight::Geometric g : b.terms_) {
		g.coeff = -g.coeff;
		terms.push_back(g);
	}
	return Weight(std::move(terms));
}

std::vector<Residue> Weight::sequence(const PrimeContext &ctx) const
{
	const Modulus &mod = ctx.mod2();
	const uint64_t p = ctx.prime();
	std::vector<Residue> w(p, Residue::zero(mod));
	for (const Geometric &g : terms_) {
		const Residue c = Residue::from_signed(g.coeff, mod);
		if (g.num == 1 && g.den == 2) {
			for (uint64_t k = 0; k < p; ++k)
				w[k] += c * ctx.pow_half()[k];
			continue;
		}
		if (g.num == -1 && g.den == 1) {
			for (uint64_t k = 0; k < p; ++k)
				w[k] += c * ctx.neg()[k];
			continue;
		}
		const Residue base = Residue::from_signed(g.num, mod) *
		                     reduce_rational(BigRational(1, g.den), mod);
		Residue power = Residue::one(mod);
		for (uint64_t k = 0; k < p; ++k) {
			w[k] += c * power;
			power *= base;
		}
	}
	return w;
}

std::vector<Residue> power_table(const PrimeContext &ctx, int power)
{
	const uint64_t p = ctx.prime();
	std::vector<Residue> t(p, Residue::zero(ctx.mod2()));
	const auto e = static_cast<uint64_t>(power < 0 ? -power : power);
	for (uint64_t k = 1; k < p; ++k)
		t[k] = power < 0 ? pow_mod(Residue(k, ctx.mod2()), e) : pow_mod(ctx.inv()[k], e);
	return t;
}

Residue lhs_single_sum(const PrimeContext &ctx, const SingleSumSpec &spec)
{
	const uint64_t p = ctx.prime();
	const uint64_t last = spec.range == Range::Half ? (p - 1) / 2 : p - 1;
	const auto w = spec.weight.sequence(ctx);
	const auto t = power_table(ctx, spec.power);
	const std::vector<Residue> *h = spec.harmonic_exponent > 0 ? &ctx.harmonic(spec.harmonic_order) : nullptr;

	Residue acc = Residue::zero(ctx.mod2());
	for (uint64_t k = 1; k <= last; ++k) {
		Residue term = w[k] * t[k];
		if (h)
			term *= pow_mod((*h)[k], static_cast<uint64_t>(spec.harmonic_exponent));
		acc += term;
	}
	return acc;
}

Residue lhs_double_sum(const PrimeContext &ctx, const DoubleSumSpec &spec)
{
	const uint64_t p = ctx.prime();
	const auto w = spec.weight.sequence(ctx);
	const auto tj = power_table(ctx, spec.j_power);
	const auto tk = power_table(ctx, spec.k_power);
	const bool weak = spec.ordering == Ordering::Weak;

	Residue prefix = Residue::zero(ctx.mod2());
	Residue acc = Residue::zero(ctx.mod2());
	for (uint64_t k = 1; k < p; ++k) {
		if (weak)
			prefix += w[k] * tj[k];
		acc += prefix * tk[k];
		if (!weak)
			prefix += w[k] * tj[k];
	}
	return acc;
}

Residue lhs_triple_sum(const PrimeContext &ctx, const TripleSumSpec &spec)
{
	const uint64_t p = ctx.prime();
	const auto w = spec.weight.sequence(ctx);
	const auto ti = power_table(ctx, spec.i_power);
	const auto tj = power_table(ctx, spec.j_power);
	const auto tk = power_table(ctx, spec.k_power);

	Residue inner = Residue::zero(ctx.mod2());
	Residue middle = Residue::zero(ctx.mod2());
	Residue acc = Residue::zero(ctx.mod2());
	if (spec.ordering == Ordering::Weak) {
		for (uint64_t t = 1; t < p; ++t) {
			inner += w[t] * ti[t];
			middle += inner * tj[t];
			acc += middle * tk[t];
		}
	} else {
		// each prefix only sees strictly smaller indices
		for (uint64_t t = 1; t < p; ++t) {
			acc += middle * tk[t];
			middle += inner * tj[t];
			inner += w[t] * ti[t];
		}
	}
	return acc;
}

} // namespace hcong
