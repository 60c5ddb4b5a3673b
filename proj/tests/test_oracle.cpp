#include <gtest/gtest.h>

#include "hcong/errors.hpp"
#include "hcong/oracle.hpp"

using namespace hcong;

namespace {

CongruenceCase make(const std::string &id, std::optional<int64_t> param = std::nullopt)
{
	return {&find_family(id), param};
}

CongruenceReport fast(const CongruenceCase &c, uint64_t p)
{
	auto orders = required_orders({c});
	orders.insert(1);
	return evaluate_case(c, build_context(p, orders));
}

BigRational inv_pow(long k, int e) { return pow(BigRational(k), -e); }

} // namespace

TEST(Oracle, SpotValuesMatchFastPath)
{
	auto o = oracle_evaluate(make("T1.1"), 5);
	EXPECT_EQ(o.lhs, 15u);
	EXPECT_EQ(o.rhs, 15u);
	EXPECT_EQ(o.verdict, Verdict::Pass);

	const auto c = make("L2.3b");
	o = oracle_evaluate(c, 7);
	const auto f = fast(c, 7);
	EXPECT_EQ(o.lhs, f.lhs);
	EXPECT_EQ(o.rhs, f.rhs);
	EXPECT_EQ(o.lhs, 0u);

	o = oracle_evaluate(make("KF.wolstenholme"), 13);
	EXPECT_EQ(o.lhs, 0u);
	EXPECT_EQ(o.verdict, Verdict::Pass);
}

TEST(Oracle, Bounds)
{
	EXPECT_THROW(oracle_evaluate(make("T1.1"), 101), OracleBoundExceeded);
	EXPECT_THROW(oracle_evaluate(make("KF.zs", 2), 37), OracleBoundExceeded);
	EXPECT_NO_THROW(oracle_evaluate(make("KF.zs", 2), 31));
	EXPECT_THROW(oracle_evaluate(make("T1.1"), 9), std::invalid_argument);

	const Oracle wide(101, 11);
	EXPECT_EQ(wide.evaluate(make("T1.1"), 101).verdict, Verdict::Pass);
	EXPECT_THROW(wide.evaluate(make("L2.3b"), 13), OracleBoundExceeded);
}

TEST(Oracle, SkipsMatchFastPath)
{
	const auto o = oracle_evaluate(make("T1.3", 1), 7);
	EXPECT_EQ(o.verdict, Verdict::Skip);
	EXPECT_EQ(o.reason, "(p-1) | 6n");
}

TEST(ExactHelpers, MatchPlainLoops)
{
	for (uint64_t p : {5u, 7u, 11u, 13u}) {
		const long n = static_cast<long>(p) - 1;
		const auto h2 = exact::harmonics(p, 2);
		ASSERT_EQ(h2.size(), p);
		BigRational acc(0);
		for (long k = 1; k <= n; ++k) {
			acc = acc + inv_pow(k, 2);
			EXPECT_EQ(h2[k], acc);
		}

		const auto w = [](long j) { return BigInt(j % 3 == 0 ? 2 : -1); };
		for (auto ord : {Ordering::Strict, Ordering::Weak}) {
			BigRational d(0), t(0);
			for (long j = 1; j <= n; ++j)
				for (long k = j; k <= n; ++k) {
					if (ord == Ordering::Strict && k == j)
						continue;
					d = d + BigRational(w(j)) * inv_pow(j, 1) * inv_pow(k, 2);
				}
			for (long i = 1; i <= n; ++i)
				for (long j = i; j <= n; ++j)
					for (long k = j; k <= n; ++k) {
						if (ord == Ordering::Strict && (i == j || j == k))
							continue;
						t = t + BigRational(w(i)) * inv_pow(i, 2) * inv_pow(j, 1) * inv_pow(k, 1);
					}
			EXPECT_EQ(exact::double_sum(p, 1, 2, w, ord), d);
			EXPECT_EQ(exact::triple_sum(p, 2, 1, 1, w, ord), t);
		}

		const auto s = exact::single_sum(n, [](long k) { return inv_pow(k, 1); });
		EXPECT_EQ(s, exact::harmonics(p, 1).back());
	}
}

TEST(ExactHelpers, BernoulliMultiple)
{
	const auto bern = bernoulli_exact(kDefaultBernoulliCap);
	const ExactContext ec{5, bern};
	EXPECT_EQ(exact::bernoulli_multiple(ec, BigRational(7, 24), 2, 1), BigRational(35, 144));
	EXPECT_EQ(exact::reduce(ec, 2, BigRational(35, 144)).value(), 15u);
	EXPECT_THROW(exact::reduce(ec, 2, BigRational(1, 5)), PDividesDenominator);
}

TEST(Properties, FastPathEqualsOracleSmallPrimes)
{
	for (uint64_t p : primes_in_range(5, 43))
		for (const auto &f : registry()) {
			if (f.triple_sum && p > 17)
				continue;
			for (const auto &c : instances(f, p, {})) {
				const auto a = fast(c, p);
				const auto b = oracle_evaluate(c, p);
				ASSERT_EQ(a.verdict, b.verdict) << f.id << " " << c.params_string() << " p=" << p;
				ASSERT_EQ(a.modulus, b.modulus);
				ASSERT_EQ(a.lhs, b.lhs) << f.id << " " << c.params_string() << " p=" << p;
				ASSERT_EQ(a.rhs, b.rhs) << f.id << " " << c.params_string() << " p=" << p;
			}
		}
}
