#include "hcong/congruence_suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <regex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hcong/errors.hpp"
#include "hcong/oracle.hpp"

namespace hcong {

namespace {

using Skip = std::optional<std::string>;

Residue to_exponent(const PrimeContext &ctx, int exponent, const Residue &r)
{
	return exponent == 2 ? r : r.reduce_to(ctx.mod1());
}

Skip always(uint64_t, int64_t) { return std::nullopt; }

std::set<int> no_orders(int64_t) { return {}; }
std::set<int> order_one(int64_t) { return {1}; }

std::vector<int64_t> no_values(uint64_t, const ParamBounds &) { return {0}; }

std::vector<int64_t> iota_values(int64_t from, int64_t to, int64_t step = 1)
{
	std::vector<int64_t> v;
	for (int64_t x = from; x <= to; x += step)
		v.push_back(x);
	return v;
}

std::vector<int64_t> n_values(uint64_t, const ParamBounds &b) { return iota_values(1, b.max_n); }
std::vector<int64_t> m_values(uint64_t, const ParamBounds &b) { return iota_values(2, b.max_m, 2); }

Skip bad_n(int64_t n)
{
	if (n < 1)
		return "n must be positive";
	return std::nullopt;
}

Skip bad_m(int64_t m)
{
	if (m < 2 || m % 2 != 0)
		return "m must be even and >= 2";
	return std::nullopt;
}

Skip p_above(uint64_t p, int64_t bound, const std::string &what)
{
	if (static_cast<int64_t>(p) <= bound)
		return "p <= " + what;
	return std::nullopt;
}

Residue signed_residue(const Modulus &mod, int64_t v) { return Residue::from_signed(v, mod); }

// Sides of the fast path for a single-sum statement whose rhs is a Bernoulli multiple.
Sides single_vs_bernoulli(const PrimeContext &ctx, int exponent, const SingleSumSpec &lhs, const BigRational &coeff,
                          int64_t offset, int p_factor)
{
	return {to_exponent(ctx, exponent, lhs_single_sum(ctx, lhs)),
	        rhs_bernoulli_multiple(ctx, coeff, offset, p_factor, exponent)};
}

Sides single_vs_zero(const PrimeContext &ctx, int exponent, const SingleSumSpec &lhs)
{
	return {to_exponent(ctx, exponent, lhs_single_sum(ctx, lhs)), Residue::zero(ctx.modulus(exponent))};
}

BigRational sgn_pow(long k) { return BigRational(k % 2 == 0 ? 1 : -1); }
BigRational two_pow(long k) { return pow(BigRational(2), k); }
BigRational inv_pow(long k, long e) { return pow(BigRational(k), -e); }

BigInt int_pow(long base, long e)
{
	BigInt r;
	BigInt b = base;
	mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
	return r;
}

// H_{p-k} against H_k - 1/k at every k; sides are the totals when all agree,
// else the first disagreeing pair.
Sides pointwise(const std::vector<Residue> &lhs, const std::vector<Residue> &rhs, const Modulus &mod)
{
	Residue l = Residue::zero(mod), r = Residue::zero(mod);
	for (size_t k = 1; k < lhs.size(); ++k) {
		if (!(lhs[k] == rhs[k]))
			return {lhs[k], rhs[k]};
		l += lhs[k];
		r += rhs[k];
	}
	return {l, r};
}

std::vector<CaseFamily> build_registry()
{
	std::vector<CaseFamily> reg;
	const BigRational b0 = BigRational(0);

	// -- weighted harmonic sums ------------------------------------------------

	reg.push_back({
	    .id = "T1.1",
	    .exponent = 2,
	    .statement = "sum_{k=1}^{p-1} H_k/(k 2^k) == (7/24) p B_{p-3}",
	    .anchor = "weighted harmonic sum, mod p^2",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = order_one,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        return single_vs_bernoulli(ctx, 2, {Weight::half_power(), 1, 1, 1}, BigRational(7, 24), 2, 1);
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        auto h = exact::harmonics(ec.p, 1);
		        auto lhs = exact::single_sum(ec.p - 1, [&](long k) { return h[k] * inv_pow(k, 1) / two_pow(k); });
		        auto rhs = exact::bernoulli_multiple(ec, BigRational(7, 24), 2, 1);
		        return Sides{exact::reduce(ec, 2, lhs), exact::reduce(ec, 2, rhs)};
	        },
	});

	reg.push_back({
	    .id = "T1.2",
	    .exponent = 1,
	    .statement = "sum_{k=1}^{p-1} H_{k,2}/(k 2^k) == -(3/8) B_{p-3}",
	    .anchor = "second-order weighted harmonic sum, mod p",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = [](int64_t) { return std::set<int>{2}; },
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        return single_vs_bernoulli(ctx, 1, {Weight::half_power(), 1, 2, 1}, BigRational(-3, 8), 2, 0);
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        auto h = exact::harmonics(ec.p, 2);
		        auto lhs = exact::single_sum(ec.p - 1, [&](long k) { return h[k] * inv_pow(k, 1) / two_pow(k); });
		        auto rhs = exact::bernoulli_multiple(ec, BigRational(-3, 8), 2, 0);
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, rhs)};
	        },
	});

	auto squared_harmonic_exact = [](const ExactContext &ec, int64_t n) {
		const long m = 2 * n;
		auto h = exact::harmonics(ec.p, m);
		return exact::single_sum(ec.p - 1, [&](long k) { return h[k] * h[k] * inv_pow(k, m); });
	};

	reg.push_back({
	    .id = "T1.3",
	    .param = 'n',
	    .exponent = 1,
	    .statement = "sum_{k=1}^{p-1} H_{k,2n}^2/k^{2n} == 0",
	    .anchor = "squared harmonic power sum, vanishing mod p",
	    .predicate = "(p-1) does not divide 6n",
	    .skip_reason =
	        [](uint64_t p, int64_t n) -> Skip {
		        if (auto bad = bad_n(n))
			        return bad;
		        if ((6 * n) % static_cast<int64_t>(p - 1) == 0)
			        return "(p-1) | 6n";
		        return std::nullopt;
	        },
	    .orders = [](int64_t n) { return std::set<int>{static_cast<int>(2 * n)}; },
	    .values = n_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t n) {
		        const int m = static_cast<int>(2 * n);
		        return single_vs_zero(ctx, 1, {Weight::one(), m, m, 2});
	        },
	    .exact =
	        [squared_harmonic_exact](const ExactContext &ec, int64_t n) {
		        return Sides{exact::reduce(ec, 1, squared_harmonic_exact(ec, n)), exact::reduce(ec, 1, BigRational(0))};
	        },
	});

	reg.push_back({
	    .id = "T1.4",
	    .param = 'n',
	    .exponent = 2,
	    .statement = "sum_{k=1}^{p-1} H_{k,2n}^2/k^{2n} == s(n)/(6n+1) p B_{p-1-6n}, s(n) = C(6n+1,2n-1) + n",
	    .anchor = "squared harmonic power sum, mod p^2 refinement",
	    .predicate = "p > 6n+1",
	    .skip_reason =
	        [](uint64_t p, int64_t n) -> Skip {
		        if (auto bad = bad_n(n))
			        return bad;
		        if (auto s = p_above(p, 6 * n + 1, "6n+1"))
			        return s;
		        if ((6 * n + 1) % static_cast<int64_t>(p) == 0)
			        return "p divides 6n+1";
		        return std::nullopt;
	        },
	    .orders = [](int64_t n) { return std::set<int>{static_cast<int>(2 * n)}; },
	    .values = n_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t n) {
		        const int m = static_cast<int>(2 * n);
		        return single_vs_bernoulli(ctx, 2, {Weight::one(), m, m, 2},
		                                   BigRational(s_coefficient(n), 6 * n + 1), 6 * n, 1);
	        },
	    .exact =
	        [squared_harmonic_exact](const ExactContext &ec, int64_t n) {
		        auto rhs = exact::bernoulli_multiple(ec, BigRational(s_coefficient(n), 6 * n + 1), 6 * n, 1);
		        return Sides{exact::reduce(ec, 2, squared_harmonic_exact(ec, n)), exact::reduce(ec, 2, rhs)};
	        },
	});

	// -- alternating and harmonic single sums ---------------------------------

	struct SimpleSingle {
		const char *id;
		int exponent;
		const char *statement;
		const char *anchor;
		Weight weight;
		std::function<BigRational(long)> exact_weight;
		int power;
		int order; // 0: no harmonic factor
		int harmonic_exponent;
		Range range;
		BigRational coeff;
		int64_t offset;
		int p_factor;
		int64_t min_prime; // statement requires p > min_prime
	};

	const auto add_simple = [&reg](SimpleSingle s) {
		CaseFamily f;
		f.id = s.id;
		f.exponent = s.exponent;
		f.statement = s.statement;
		f.anchor = s.anchor;
		f.predicate = "p > " + std::to_string(s.min_prime);
		const int64_t min_prime = s.min_prime;
		f.skip_reason = [min_prime](uint64_t p, int64_t) { return p_above(p, min_prime, std::to_string(min_prime)); };
		const int order = s.order;
		f.orders = [order](int64_t) { return order ? std::set<int>{order} : std::set<int>{}; };
		f.values = no_values;
		const SingleSumSpec spec{s.weight, s.power, s.order, s.harmonic_exponent, s.range};
		const int exponent = s.exponent;
		f.fast = [=](const PrimeContext &ctx, int64_t) {
			if (s.coeff.is_zero())
				return single_vs_zero(ctx, exponent, spec);
			return single_vs_bernoulli(ctx, exponent, spec, s.coeff, s.offset, s.p_factor);
		};
		f.exact = [=](const ExactContext &ec, int64_t) {
			const uint64_t last = s.range == Range::Half ? (ec.p - 1) / 2 : ec.p - 1;
			std::vector<BigRational> h;
			if (s.order)
				h = exact::harmonics(ec.p, s.order);
			auto lhs = exact::single_sum(last, [&](long k) {
				BigRational t = s.exact_weight(k) * inv_pow(k, s.power);
				if (s.order)
					t *= pow(h[k], s.harmonic_exponent);
				return t;
			});
			BigRational rhs = s.coeff.is_zero() ? BigRational(0)
			                                    : exact::bernoulli_multiple(ec, s.coeff, s.offset, s.p_factor);
			return Sides{exact::reduce(ec, exponent, lhs), exact::reduce(ec, exponent, rhs)};
		};
		reg.push_back(std::move(f));
	};

	const auto one = [](long) { return BigRational(1); };

	add_simple({"L2.1a", 2, "sum_{k=1}^{p-1} (-1)^k/k^2 == (p/2) B_{p-3}", "alternating reciprocal squares",
	            Weight::alternating(), sgn_pow, 2, 0, 0, Range::Full, BigRational(1, 2), 2, 1, 3});
	add_simple({"L2.1b", 1, "sum_{k=1}^{p-1} (-1)^k/k^3 == -B_{p-3}/2", "alternating reciprocal cubes",
	            Weight::alternating(), sgn_pow, 3, 0, 0, Range::Full, BigRational(-1, 2), 2, 0, 3});
	add_simple({"L2.1c", 2, "sum_{k=1}^{p-1} H_k/k == (p/3) B_{p-3}", "harmonic over k", Weight::one(), one, 1, 1, 1,
	            Range::Full, BigRational(1, 3), 2, 1, 3});
	add_simple({"L2.1d", 1, "sum_{k=1}^{p-1} (-1)^k H_k/k^2 == -B_{p-3}/4", "alternating harmonic over k^2",
	            Weight::alternating(), sgn_pow, 2, 1, 1, Range::Full, BigRational(-1, 4), 2, 0, 3});

	// -- weighted double and triple sums --------------------------------------

	reg.push_back({
	    .id = "L2.3a",
	    .exponent = 1,
	    .statement = "sum_{1<=j<=k<=p-1} 2^j (j+k)/(j^2 k^2) == sum_{k=1}^{p-1} (-1)^k/k^3",
	    .anchor = "geometric-weight double sum against alternating cubes",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = no_orders,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        Residue lhs = lhs_double_sum(ctx, {Weight::two_power(), 1, 2, Ordering::Weak}) +
		                      lhs_double_sum(ctx, {Weight::two_power(), 2, 1, Ordering::Weak});
		        Residue rhs = lhs_single_sum(ctx, {Weight::alternating(), 3});
		        return Sides{to_exponent(ctx, 1, lhs), to_exponent(ctx, 1, rhs)};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        auto w = [](long j) { return int_pow(2, j); };
		        auto lhs = exact::double_sum(ec.p, 1, 2, w, Ordering::Weak) +
		                   exact::double_sum(ec.p, 2, 1, w, Ordering::Weak);
		        auto rhs = exact::single_sum(ec.p - 1, [](long k) { return sgn_pow(k) * inv_pow(k, 3); });
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, rhs)};
	        },
	});

	reg.push_back({
	    .id = "L2.3b",
	    .exponent = 1,
	    .statement = "sum_{1<=i<=j<=k<=p-1} (2^i-(-1)^i)/(ijk) == sum_{k=1}^{p-1} ((-1)^k-2^k)/k^3",
	    .anchor = "weighted triple sum reduction",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = no_orders,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        Residue lhs = lhs_triple_sum(ctx, {Weight::two_power() - Weight::alternating(), 1, 1, 1, Ordering::Weak});
		        Residue rhs = lhs_single_sum(ctx, {Weight::alternating() - Weight::two_power(), 3});
		        return Sides{to_exponent(ctx, 1, lhs), to_exponent(ctx, 1, rhs)};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        auto lhs = exact::triple_sum(
		            ec.p, 1, 1, 1, [](long i) -> BigInt { return int_pow(2, i) - int_pow(-1, i); }, Ordering::Weak);
		        auto rhs = exact::single_sum(ec.p - 1, [](long k) { return (sgn_pow(k) - two_pow(k)) * inv_pow(k, 3); });
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, rhs)};
	        },
	    .triple_sum = true,
	});

	// -- double sums with power weights ---------------------------------------

	// sum_{j<k} (1/(j^m k^2m) + sign/(j^2m k^m))
	auto mixed_fast = [](const PrimeContext &ctx, int64_t m, bool plus) {
		const int mm = static_cast<int>(m);
		Residue a = lhs_double_sum(ctx, {Weight::one(), mm, 2 * mm, Ordering::Strict});
		Residue b = lhs_double_sum(ctx, {Weight::one(), 2 * mm, mm, Ordering::Strict});
		return plus ? a + b : a - b;
	};
	auto mixed_exact = [](const ExactContext &ec, int64_t m, bool plus) {
		const int mm = static_cast<int>(m);
		auto w = [](long) { return BigInt(1); };
		BigRational a = exact::double_sum(ec.p, mm, 2 * mm, w, Ordering::Strict);
		BigRational b = exact::double_sum(ec.p, 2 * mm, mm, w, Ordering::Strict);
		return plus ? a + b : a - b;
	};
	auto above_3m1 = [](uint64_t p, int64_t m) -> Skip {
		if (auto bad = bad_m(m))
			return bad;
		return p_above(p, 3 * m + 1, "3m+1");
	};
	// m C(3m,m) / ((m+1)(2m+1))
	auto l32_coeff = [](int64_t m, bool with_m) {
		BigInt num = binomial(3 * m, m);
		if (with_m)
			num *= static_cast<long>(m);
		return BigRational(num, BigInt(static_cast<long>((m + 1) * (2 * m + 1))));
	};

	reg.push_back({
	    .id = "L3.1a",
	    .param = 'm',
	    .exponent = 1,
	    .statement = "sum_{1<=j<k<=p-1} (1/(j^m k^{2m}) + 1/(j^{2m} k^m)) == 0",
	    .anchor = "symmetric power double sum, vanishing mod p",
	    .predicate = "m even, (p-1) does not divide 3m",
	    .skip_reason =
	        [](uint64_t p, int64_t m) -> Skip {
		        if (auto bad = bad_m(m))
			        return bad;
		        if ((3 * m) % static_cast<int64_t>(p - 1) == 0)
			        return "(p-1) | 3m";
		        return std::nullopt;
	        },
	    .orders = no_orders,
	    .values = m_values,
	    .fast =
	        [mixed_fast](const PrimeContext &ctx, int64_t m) {
		        return Sides{to_exponent(ctx, 1, mixed_fast(ctx, m, true)), Residue::zero(ctx.mod1())};
	        },
	    .exact =
	        [mixed_exact](const ExactContext &ec, int64_t m) {
		        return Sides{exact::reduce(ec, 1, mixed_exact(ec, m, true)), exact::reduce(ec, 1, BigRational(0))};
	        },
	});

	reg.push_back({
	    .id = "L3.1b",
	    .param = 'm',
	    .exponent = 2,
	    .statement = "sum_{1<=j<k<=p-1} (1/(j^m k^{2m}) + 1/(j^{2m} k^m)) == -p (3m/(3m+1)) B_{p-1-3m}",
	    .anchor = "symmetric power double sum, mod p^2",
	    .predicate = "m even, p > 3m+1",
	    .skip_reason = above_3m1,
	    .orders = no_orders,
	    .values = m_values,
	    .fast =
	        [mixed_fast](const PrimeContext &ctx, int64_t m) {
		        return Sides{mixed_fast(ctx, m, true),
		                     rhs_bernoulli_multiple(ctx, BigRational(-3 * m, 3 * m + 1), 3 * m, 1, 2)};
	        },
	    .exact =
	        [mixed_exact](const ExactContext &ec, int64_t m) {
		        auto rhs = exact::bernoulli_multiple(ec, BigRational(-3 * m, 3 * m + 1), 3 * m, 1);
		        return Sides{exact::reduce(ec, 2, mixed_exact(ec, m, true)), exact::reduce(ec, 2, rhs)};
	        },
	});

	reg.push_back({
	    .id = "L3.2a",
	    .param = 'm',
	    .exponent = 1,
	    .statement = "sum_{1<=j<k<=p-1} (1/(j^m k^{2m}) - 1/(j^{2m} k^m)) == 0",
	    .anchor = "antisymmetric power double sum, vanishing mod p",
	    .predicate = "m even",
	    .skip_reason = [](uint64_t, int64_t m) { return bad_m(m); },
	    .orders = no_orders,
	    .values = m_values,
	    .fast =
	        [mixed_fast](const PrimeContext &ctx, int64_t m) {
		        return Sides{to_exponent(ctx, 1, mixed_fast(ctx, m, false)), Residue::zero(ctx.mod1())};
	        },
	    .exact =
	        [mixed_exact](const ExactContext &ec, int64_t m) {
		        return Sides{exact::reduce(ec, 1, mixed_exact(ec, m, false)), exact::reduce(ec, 1, BigRational(0))};
	        },
	});

	reg.push_back({
	    .id = "L3.2b",
	    .param = 'm',
	    .exponent = 2,
	    .statement = "sum_{1<=j<k<=p-1} (1/(j^m k^{2m}) - 1/(j^{2m} k^m)) == p m C(3m,m) B_{p-1-3m}/((m+1)(2m+1))",
	    .anchor = "antisymmetric power double sum, mod p^2",
	    .predicate = "m even, p > 3m+1",
	    .skip_reason = above_3m1,
	    .orders = no_orders,
	    .values = m_values,
	    .fast =
	        [mixed_fast, l32_coeff](const PrimeContext &ctx, int64_t m) {
		        return Sides{mixed_fast(ctx, m, false), rhs_bernoulli_multiple(ctx, l32_coeff(m, true), 3 * m, 1, 2)};
	        },
	    .exact =
	        [mixed_exact, l32_coeff](const ExactContext &ec, int64_t m) {
		        auto rhs = exact::bernoulli_multiple(ec, l32_coeff(m, true), 3 * m, 1);
		        return Sides{exact::reduce(ec, 2, mixed_exact(ec, m, false)), exact::reduce(ec, 2, rhs)};
	        },
	});

	reg.push_back({
	    .id = "L3.2c",
	    .param = 'm',
	    .exponent = 1,
	    .statement = "sum_{1<=j<k<=p-1} (1/(j^{2m} k^{m+1}) + 2/(j^{2m+1} k^m)) == C(3m,m) B_{p-1-3m}/((m+1)(2m+1))",
	    .anchor = "first-order correction of the antisymmetric sum",
	    .predicate = "m even, p > 3m+1",
	    .skip_reason = above_3m1,
	    .orders = no_orders,
	    .values = m_values,
	    .fast =
	        [l32_coeff](const PrimeContext &ctx, int64_t m) {
		        const int mm = static_cast<int>(m);
		        Residue a = lhs_double_sum(ctx, {Weight::one(), 2 * mm, mm + 1, Ordering::Strict});
		        Residue b = lhs_double_sum(ctx, {Weight::one(), 2 * mm + 1, mm, Ordering::Strict});
		        return Sides{to_exponent(ctx, 1, a + b + b),
		                     rhs_bernoulli_multiple(ctx, l32_coeff(m, false), 3 * m, 0, 1)};
	        },
	    .exact =
	        [l32_coeff](const ExactContext &ec, int64_t m) {
		        const int mm = static_cast<int>(m);
		        auto w = [](long) { return BigInt(1); };
		        BigRational lhs = exact::double_sum(ec.p, 2 * mm, mm + 1, w, Ordering::Strict) +
		                          BigRational(2) * exact::double_sum(ec.p, 2 * mm + 1, mm, w, Ordering::Strict);
		        auto rhs = exact::bernoulli_multiple(ec, l32_coeff(m, false), 3 * m, 0);
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, rhs)};
	        },
	});

	// -- classical congruences --------------------------------------------------

	reg.push_back({
	    .id = "KF.wolstenholme",
	    .exponent = 2,
	    .statement = "H_{p-1} == 0",
	    .anchor = "Wolstenholme's theorem",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = order_one,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        return Sides{ctx.harmonic(1)[ctx.prime() - 1], Residue::zero(ctx.mod2())};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        return Sides{exact::reduce(ec, 2, harmonic_exact(static_cast<long>(ec.p) - 1, 1)),
		                     exact::reduce(ec, 2, BigRational(0))};
	        },
	});

	add_simple({"KF.su1", 1, "sum_{k=1}^{p-1} H_k/(k 2^k) == 0", "weighted harmonic sum, mod p",
	            Weight::half_power(), [](long k) { return BigRational(1) / two_pow(k); }, 1, 1, 1, Range::Full, b0, 0,
	            0, 5});
	add_simple({"KF.su2", 1, "sum_{k=1}^{p-1} H_k^2/k^2 == 0", "squared harmonic sum, mod p",
	            Weight::one(), one, 2, 1, 2, Range::Full, b0, 0, 0, 5});
	add_simple({"KF.mestrovic", 2, "sum_{k=1}^{p-1} H_k^2/k^2 == (4/5) p B_{p-5}",
	            "squared harmonic sum mod p^2 (B_0 = 1 at p = 5)", Weight::one(), one, 2, 1, 2, Range::Full,
	            BigRational(4, 5), 4, 1, 3});
	add_simple({"KF.s1", 2, "sum_{k=1}^{p-1} 1/k^2 == (2/3) p B_{p-3}", "reciprocal squares", Weight::one(), one, 2, 0,
	            0, Range::Full, BigRational(2, 3), 2, 1, 3});

	reg.push_back({
	    .id = "KF.s2",
	    .exponent = 2,
	    .statement = "sum_{k=1}^{p-1} 1/k^3 == -p [p = 5]",
	    .anchor = "reciprocal cubes",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = no_orders,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        const int64_t p = static_cast<int64_t>(ctx.prime());
		        return Sides{lhs_single_sum(ctx, {Weight::one(), 3}), signed_residue(ctx.mod2(), p == 5 ? -p : 0)};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        const long p = static_cast<long>(ec.p);
		        auto lhs = exact::single_sum(ec.p - 1, [](long k) { return inv_pow(k, 3); });
		        return Sides{exact::reduce(ec, 2, lhs), exact::reduce(ec, 2, BigRational(p == 5 ? -p : 0))};
	        },
	});

	add_simple({"KF.s3", 2, "sum_{k=1}^{(p-1)/2} 1/k^2 == (7/3) p B_{p-3}", "half-range reciprocal squares",
	            Weight::one(), one, 2, 0, 0, Range::Half, BigRational(7, 3), 2, 1, 3});
	add_simple({"KF.s4", 1, "sum_{k=1}^{(p-1)/2} 1/k^3 == -2 B_{p-3}", "half-range reciprocal cubes", Weight::one(),
	            one, 3, 0, 0, Range::Half, BigRational(-2), 2, 0, 3});

	reg.push_back({
	    .id = "KF.s5",
	    .exponent = 2,
	    .statement = "sum_{1<=j<k<=p-1} 1/(jk) == -(p/3) B_{p-3}",
	    .anchor = "strict reciprocal double sum",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = no_orders,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        return Sides{lhs_double_sum(ctx, {Weight::one(), 1, 1, Ordering::Strict}),
		                     rhs_bernoulli_multiple(ctx, BigRational(-1, 3), 2, 1, 2)};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        auto lhs = exact::double_sum(ec.p, 1, 1, [](long) { return BigInt(1); }, Ordering::Strict);
		        auto rhs = exact::bernoulli_multiple(ec, BigRational(-1, 3), 2, 1);
		        return Sides{exact::reduce(ec, 2, lhs), exact::reduce(ec, 2, rhs)};
	        },
	});

	add_simple({"KF.st", 1, "sum_{k=1}^{p-1} H_k/k^2 == B_{p-3}", "harmonic over k^2", Weight::one(), one, 2, 1, 1,
	            Range::Full, BigRational(1), 2, 0, 3});

	reg.push_back({
	    .id = "KF.zs",
	    .param = 'x',
	    .exponent = 1,
	    .statement = "sum_{1<=i<j<k<=p-1} (1-x)^i/(ijk) == sum_{1<=i<j<k<=p-1} x^i/(ijk)",
	    .anchor = "x <-> 1-x symmetry of the strict triple sum",
	    .predicate = "0 <= x < p",
	    .skip_reason =
	        [](uint64_t p, int64_t x) -> Skip {
		        if (x < 0 || static_cast<uint64_t>(x) >= p)
			        return "x outside [0, p)";
		        return std::nullopt;
	        },
	    .orders = no_orders,
	    .values =
	        [](uint64_t p, const ParamBounds &b) {
		        if (p <= b.zs_full_upto)
			        return iota_values(0, static_cast<int64_t>(p) - 1);
		        return std::vector<int64_t>{2};
	        },
	    .fast =
	        [](const PrimeContext &ctx, int64_t x) {
		        Residue lhs = lhs_triple_sum(ctx, {Weight::geometric(1 - x), 1, 1, 1, Ordering::Strict});
		        Residue rhs = lhs_triple_sum(ctx, {Weight::geometric(x), 1, 1, 1, Ordering::Strict});
		        return Sides{to_exponent(ctx, 1, lhs), to_exponent(ctx, 1, rhs)};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t x) {
		        auto lhs = exact::triple_sum(
		            ec.p, 1, 1, 1, [x](long i) { return int_pow(1 - x, i); }, Ordering::Strict);
		        auto rhs = exact::triple_sum(
		            ec.p, 1, 1, 1, [x](long i) { return int_pow(x, i); }, Ordering::Strict);
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, rhs)};
	        },
	    .triple_sum = true,
	});

	reg.push_back({
	    .id = "KF.psum",
	    .param = 'n',
	    .exponent = 2,
	    .statement = "sum_{k=1}^{p-1} 1/k^n == (p n/(n+1)) B_{p-1-n}",
	    .anchor = "reciprocal power sums mod p^2",
	    .predicate = "2 <= n <= p-3",
	    .skip_reason =
	        [](uint64_t p, int64_t n) -> Skip {
		        if (n < 2 || n > static_cast<int64_t>(p) - 3)
			        return "n outside [2, p-3]";
		        return std::nullopt;
	        },
	    .orders = no_orders,
	    .values = [](uint64_t, const ParamBounds &b) { return iota_values(2, b.max_psum); },
	    .fast =
	        [](const PrimeContext &ctx, int64_t n) {
		        return single_vs_bernoulli(ctx, 2, {Weight::one(), static_cast<int>(n)}, BigRational(n, n + 1), n, 1);
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t n) {
		        auto lhs = exact::single_sum(ec.p - 1, [n](long k) { return inv_pow(k, n); });
		        auto rhs = exact::bernoulli_multiple(ec, BigRational(n, n + 1), n, 1);
		        return Sides{exact::reduce(ec, 2, lhs), exact::reduce(ec, 2, rhs)};
	        },
	});

	reg.push_back({
	    .id = "KF.psum.vanish",
	    .param = 'n',
	    .exponent = 1,
	    .statement = "sum_{k=1}^{p-1} 1/k^n == 0",
	    .anchor = "reciprocal power sums mod p",
	    .predicate = "(p-1) does not divide n",
	    .skip_reason =
	        [](uint64_t p, int64_t n) -> Skip {
		        if (n % static_cast<int64_t>(p - 1) == 0)
			        return "(p-1) | n";
		        return std::nullopt;
	        },
	    .orders = no_orders,
	    .values = [](uint64_t, const ParamBounds &b) { return iota_values(2, b.max_psum); },
	    .fast =
	        [](const PrimeContext &ctx, int64_t n) {
		        return single_vs_zero(ctx, 1, {Weight::one(), static_cast<int>(n)});
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t n) {
		        auto lhs = exact::single_sum(ec.p - 1, [n](long k) { return inv_pow(k, n); });
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, BigRational(0))};
	        },
	});

	reg.push_back({
	    .id = "KF.powmod",
	    .param = 'n',
	    .exponent = 1,
	    .statement = "sum_{k=1}^{p-1} k^n == -1 if (p-1) | n, else 0",
	    .anchor = "power sums mod p",
	    .predicate = "n >= 0",
	    .skip_reason =
	        [](uint64_t, int64_t n) -> Skip {
		        if (n < 0)
			        return "n must be nonnegative";
		        return std::nullopt;
	        },
	    .orders = no_orders,
	    .values = [](uint64_t, const ParamBounds &b) { return iota_values(1, b.max_powmod); },
	    .fast =
	        [](const PrimeContext &ctx, int64_t n) {
		        const bool divides = n % static_cast<int64_t>(ctx.prime() - 1) == 0;
		        return Sides{to_exponent(ctx, 1, lhs_single_sum(ctx, {Weight::one(), -static_cast<int>(n)})),
		                     signed_residue(ctx.mod1(), divides ? -1 : 0)};
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t n) {
		        const bool divides = n % static_cast<int64_t>(ec.p - 1) == 0;
		        auto lhs = exact::single_sum(ec.p - 1, [n](long k) { return BigRational(int_pow(k, n)); });
		        return Sides{exact::reduce(ec, 1, lhs), exact::reduce(ec, 1, BigRational(divides ? -1 : 0))};
	        },
	});

	reg.push_back({
	    .id = "KF.hsym",
	    .exponent = 1,
	    .statement = "H_{p-k} == H_k - 1/k for every 1 <= k <= p-1",
	    .anchor = "reflection of harmonic numbers",
	    .predicate = "p > 3",
	    .skip_reason = always,
	    .orders = order_one,
	    .values = no_values,
	    .fast =
	        [](const PrimeContext &ctx, int64_t) {
		        const uint64_t p = ctx.prime();
		        const auto &h = ctx.harmonic(1);
		        std::vector<Residue> lhs(p, Residue::zero(ctx.mod1())), rhs = lhs;
		        for (uint64_t k = 1; k < p; ++k) {
			        lhs[k] = h[p - k].reduce_to(ctx.mod1());
			        rhs[k] = (h[k] - ctx.inv()[k]).reduce_to(ctx.mod1());
		        }
		        return pointwise(lhs, rhs, ctx.mod1());
	        },
	    .exact =
	        [](const ExactContext &ec, int64_t) {
		        const Modulus mod(ec.p, 1);
		        auto h = exact::harmonics(ec.p, 1);
		        std::vector<Residue> lhs(ec.p, Residue::zero(mod)), rhs = lhs;
		        for (uint64_t k = 1; k < ec.p; ++k) {
			        lhs[k] = reduce_rational(h[ec.p - k], mod);
			        rhs[k] = reduce_rational(h[k] - BigRational(1, static_cast<long>(k)), mod);
		        }
		        return pointwise(lhs, rhs, mod);
	        },
	});

	return reg;
}

} // namespace

const std::vector<CaseFamily> &registry()
{
	static const std::vector<CaseFamily> reg = build_registry();
	return reg;
}

const CaseFamily &find_family(const std::string &id)
{
	for (const auto &f : registry())
		if (f.id == id)
			return f;
	std::string valid;
	for (const auto &f : registry())
		valid += (valid.empty() ? "" : ", ") + f.id;
	throw std::invalid_argument("unknown case id '" + id + "'; valid ids: " + valid);
}

std::string CongruenceCase::params_string() const
{
	if (family->param == '\0' || !param)
		return "";
	return std::string(1, family->param) + "=" + std::to_string(*param);
}

std::string to_string(Verdict v)
{
	switch (v) {
	case Verdict::Pass:
		return "pass";
	case Verdict::Fail:
		return "fail";
	case Verdict::Skip:
		return "skip";
	}
	return "?";
}

bool report_less(const CongruenceReport &a, const CongruenceReport &b)
{
	return std::tie(a.prime, a.case_id, a.param) < std::tie(b.prime, b.case_id, b.param);
}

Residue rhs_bernoulli_multiple(const PrimeContext &ctx, const BigRational &coeff, int64_t offset, int p_factor,
                               int exponent)
{
	const int64_t p = static_cast<int64_t>(ctx.prime());
	const int64_t index = p - 1 - offset;
	if (index < 0 || index > p - 3)
		throw std::logic_error("Bernoulli index " + std::to_string(index) + " outside [0, p-3]");
	if (index == 0) {
		// B_0 = 1 exactly, so p may cancel a p in the coefficient's denominator
		BigRational c = p_factor ? coeff * BigRational(p) : coeff;
		return reduce_rational(c, ctx.modulus(exponent));
	}
	if (exponent == 2 && p_factor == 0)
		throw std::logic_error("B_j is only tabulated mod p; a mod p^2 right side needs the factor p");
	const Residue v = reduce_rational(coeff, ctx.mod1()) * ctx.bern()[static_cast<size_t>(index)];
	if (exponent == 1)
		return p_factor ? Residue::zero(ctx.mod1()) : v;
	// p * (c B mod p) is well defined mod p^2
	return Residue(v.value() * ctx.prime(), ctx.mod2());
}

std::vector<CongruenceCase> instances(const CaseFamily &family, uint64_t p, const ParamBounds &bounds)
{
	std::vector<CongruenceCase> out;
	if (family.param == '\0') {
		out.push_back({&family, std::nullopt});
		return out;
	}
	for (int64_t v : family.values(p, bounds))
		out.push_back({&family, v});
	return out;
}

CaseSelector parse_selector(const std::string &text)
{
	static const std::regex pattern(R"(^\s*([A-Za-z0-9.]+)\s*(?:\(\s*([a-z])\s*=\s*(-?[0-9]+)\s*\))?\s*$)");
	std::smatch match;
	if (!std::regex_match(text, match, pattern))
		throw std::invalid_argument("malformed case selector '" + text + "'");
	const CaseFamily &family = find_family(match[1]);
	CaseSelector sel{family.id, std::nullopt};
	if (match[2].matched) {
		if (family.param == '\0')
			throw std::invalid_argument("case " + family.id + " takes no parameter");
		if (match[2].str()[0] != family.param)
			throw std::invalid_argument("case " + family.id + " is parameterized by " + family.param);
		sel.param = std::stoll(match[3]);
	}
	return sel;
}

std::vector<CaseSelector> all_cases()
{
	std::vector<CaseSelector> out;
	for (const auto &f : registry())
		out.push_back({f.id, std::nullopt});
	return out;
}

std::set<int> required_orders(const std::vector<CongruenceCase> &cases)
{
	std::set<int> orders;
	for (const auto &c : cases)
		for (int m : c.family->orders(c.param_value()))
			orders.insert(m);
	return orders;
}

CongruenceReport evaluate_case(const CongruenceCase &c, const PrimeContext &ctx)
{
	const CaseFamily &f = *c.family;
	CongruenceReport r;
	r.prime = ctx.prime();
	r.case_id = f.id;
	r.params = c.params_string();
	r.param = c.param;
	r.modulus = ctx.modulus(f.exponent).value();

	const auto start = std::chrono::steady_clock::now();
	if (auto why = f.skip_reason(ctx.prime(), c.param_value())) {
		r.verdict = Verdict::Skip;
		r.reason = *why;
	} else {
		for (int m : f.orders(c.param_value()))
			if (!ctx.has_order(m))
				throw MissingOrder(m);
		try {
			const Sides s = f.fast(ctx, c.param_value());
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

namespace {

CongruenceReport failed_report(uint64_t p, const CongruenceCase &c, std::string reason)
{
	CongruenceReport r;
	r.prime = p;
	r.case_id = c.id();
	r.params = c.params_string();
	r.param = c.param;
	r.modulus = c.family->exponent == 2 ? p * p : p;
	r.verdict = Verdict::Fail;
	r.reason = std::move(reason);
	return r;
}

std::vector<CongruenceReport> run_prime(uint64_t p, const std::vector<CaseSelector> &selection,
                                        const SuiteOptions &options, const Oracle *oracle)
{
	std::vector<CongruenceCase> cases;
	for (const auto &sel : selection) {
		const CaseFamily &f = find_family(sel.id);
		if (sel.param)
			cases.push_back({&f, sel.param});
		else
			for (auto &c : instances(f, p, options.bounds))
				cases.push_back(c);
	}

	std::vector<CongruenceReport> out;
	out.reserve(cases.size());
	std::optional<PrimeContext> ctx;
	std::string ctx_error;
	try {
		std::vector<CongruenceCase> applicable;
		for (const auto &c : cases)
			if (!c.family->skip_reason(p, c.param_value()))
				applicable.push_back(c);
		std::set<int> orders = required_orders(applicable);
		orders.insert(1);
		ctx.emplace(p, orders);
	} catch (const std::exception &e) {
		ctx_error = e.what();
	}

	for (const auto &c : cases) {
		if (!ctx) {
			out.push_back(failed_report(p, c, ctx_error));
			continue;
		}
		CongruenceReport r;
		try {
			r = evaluate_case(c, *ctx);
		} catch (const std::exception &e) {
			out.push_back(failed_report(p, c, e.what()));
			continue;
		}
		if (r.verdict != Verdict::Skip && options.corrupt_rhs.count(r.case_id)) {
			r.rhs = (r.rhs + 1) % r.modulus;
			r.verdict = r.lhs == r.rhs ? Verdict::Pass : Verdict::Fail;
		}
		if (oracle && r.verdict != Verdict::Skip && p <= oracle->bound()) {
			try {
				const CongruenceReport o = oracle->evaluate(c, p);
				if (o.lhs != r.lhs || o.rhs != r.rhs || o.verdict != r.verdict) {
					r.verdict = Verdict::Fail;
					r.reason = "oracle mismatch";
				}
			} catch (const OracleBoundExceeded &) {
				// cubic cases are only cross-checked for small primes
			} catch (const std::exception &e) {
				r.verdict = Verdict::Fail;
				r.reason = std::string("oracle error: ") + e.what();
			}
		}
		out.push_back(std::move(r));
	}
	std::sort(out.begin(), out.end(), report_less);
	return out;
}

} // namespace

std::vector<CongruenceReport> run_suite(const std::vector<uint64_t> &primes, const std::vector<CaseSelector> &cases,
                                        const SuiteOptions &options)
{
	for (const auto &sel : cases)
		find_family(sel.id);
	if (cases.empty() || primes.empty())
		return {};

	std::optional<Oracle> oracle;
	if (options.oracle_upto > 0)
		oracle.emplace(options.oracle_upto);

	std::vector<std::vector<CongruenceReport>> per_prime(primes.size());
	std::atomic<size_t> next{0};
	auto worker = [&] {
		for (size_t i = next++; i < primes.size(); i = next++)
			per_prime[i] = run_prime(primes[i], cases, options, oracle ? &*oracle : nullptr);
	};
	const unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(primes.size())));
	{
		std::vector<std::jthread> pool;
		for (unsigned t = 1; t < n; ++t)
			pool.emplace_back(worker);
		worker();
	}

	std::vector<CongruenceReport> out;
	for (auto &chunk : per_prime)
		for (auto &r : chunk)
			out.push_back(std::move(r));
	std::sort(out.begin(), out.end(), report_less);
	return out;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi)
{
	std::vector<uint64_t> out;
	if (hi < 2 || hi < lo)
		return out;
	lo = std::max<uint64_t>(lo, 2);
	const auto root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
	std::vector<bool> small(root + 1, true);
	std::vector<uint64_t> base;
	for (uint64_t i = 2; i <= root; ++i) {
		if (!small[i])
			continue;
		base.push_back(i);
		for (uint64_t j = i * i; j <= root; j += i)
			small[j] = false;
	}

	constexpr uint64_t kSegment = 1 << 20;
	for (uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
		const uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
		std::vector<bool> composite(seg_hi - seg_lo + 1, false);
		for (uint64_t q : base) {
			if (q * q > seg_hi)
				break;
			uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
			for (uint64_t j = start; j <= seg_hi; j += q)
				composite[j - seg_lo] = true;
		}
		for (uint64_t v = seg_lo; v <= seg_hi; ++v)
			if (!composite[v - seg_lo])
				out.push_back(v);
		if (seg_hi == hi)
			break;
	}
	return out;
}

} // namespace hcong
