#include <gtest/gtest.h>

#include "hcong/congruence_suite.hpp"
#include "hcong/errors.hpp"

using namespace hcong;

namespace {

CongruenceReport eval(const std::string &id, uint64_t p, std::optional<int64_t> param = std::nullopt)
{
	const CaseFamily &f = find_family(id);
	const CongruenceCase c{&f, param};
	const auto ctx = build_context(p, required_orders({c}).empty() ? std::set<int>{1} : required_orders({c}));
	return evaluate_case(c, ctx);
}

std::vector<uint64_t> primes_upto(uint64_t hi) { return primes_in_range(5, hi); }

} // namespace

TEST(EvaluateCase, SpotValues)
{
	auto r = eval("T1.1", 5);
	EXPECT_EQ(r.modulus, 25u);
	EXPECT_EQ(r.lhs, 15u);
	EXPECT_EQ(r.rhs, 15u);
	EXPECT_EQ(r.verdict, Verdict::Pass);

	r = eval("T1.2", 5);
	EXPECT_EQ(r.modulus, 5u);
	EXPECT_EQ(r.lhs, 4u);
	EXPECT_EQ(r.rhs, 4u);

	r = eval("T1.3", 5, 1);
	EXPECT_EQ(r.params, "n=1");
	EXPECT_EQ(r.lhs, 0u);
	EXPECT_EQ(r.verdict, Verdict::Pass);

	r = eval("L2.1a", 5);
	EXPECT_EQ(r.lhs, 15u);
	EXPECT_EQ(r.rhs, 15u);

	r = eval("KF.mestrovic", 5);
	EXPECT_EQ(r.modulus, 25u);
	EXPECT_EQ(r.lhs, 4u);
	EXPECT_EQ(r.rhs, 4u);
	EXPECT_EQ(r.verdict, Verdict::Pass);

	r = eval("T1.3", 7, 1);
	EXPECT_EQ(r.verdict, Verdict::Skip);
	EXPECT_EQ(r.reason, "(p-1) | 6n");

	r = eval("KF.wolstenholme", 13);
	EXPECT_EQ(r.lhs, 0u);
	EXPECT_EQ(r.verdict, Verdict::Pass);
}

TEST(EvaluateCase, MissingOrderIsReported)
{
	const CongruenceCase c{&find_family("T1.2"), std::nullopt};
	const auto ctx = build_context(11, {1});
	EXPECT_THROW(evaluate_case(c, ctx), MissingOrder);
}

TEST(RhsBernoulliMultiple, Examples)
{
	const auto ctx5 = build_context(5, {1});
	EXPECT_EQ(rhs_bernoulli_multiple(ctx5, BigRational(7, 24), 2, 1, 2).value(), 15u);
	EXPECT_EQ(rhs_bernoulli_multiple(ctx5, BigRational(0), 2, 1, 2).value(), 0u);
	EXPECT_EQ(rhs_bernoulli_multiple(ctx5, BigRational(4, 5), 4, 1, 2).value(), 4u);

	const auto ctx11 = build_context(11, {1});
	const Residue expected = reduce_rational(BigRational(8, 7) * BigRational(11) * BigRational(-1, 30), ctx11.mod2());
	const Residue got = rhs_bernoulli_multiple(ctx11, BigRational(8, 7), 6, 1, 2);
	EXPECT_EQ(got, expected);
	EXPECT_EQ(got.value(), 33u);

	EXPECT_THROW(rhs_bernoulli_multiple(ctx11, BigRational(1, 11), 2, 1, 2), PDividesDenominator);
	EXPECT_THROW(rhs_bernoulli_multiple(ctx11, BigRational(1), 2, 0, 2), std::logic_error);
	EXPECT_THROW(rhs_bernoulli_multiple(ctx11, BigRational(1), 12, 1, 2), std::logic_error);
}

TEST(Registry, IdsAreUniqueAndResolvable)
{
	std::set<std::string> ids;
	for (const auto &f : registry()) {
		EXPECT_TRUE(ids.insert(f.id).second) << f.id;
		EXPECT_EQ(&find_family(f.id), &f);
		EXPECT_TRUE(f.exponent == 1 || f.exponent == 2);
		EXPECT_FALSE(f.statement.empty());
	}
	EXPECT_THROW(find_family("T9.9"), std::invalid_argument);
}

TEST(Selectors, Parse)
{
	auto s = parse_selector("T1.4(n=2)");
	EXPECT_EQ(s.id, "T1.4");
	EXPECT_EQ(s.param, 2);
	s = parse_selector("KF.zs");
	EXPECT_FALSE(s.param);
	EXPECT_THROW(parse_selector("T1.1(n=1)"), std::invalid_argument);
	EXPECT_THROW(parse_selector("T1.4(m=1)"), std::invalid_argument);
	EXPECT_THROW(parse_selector("bogus"), std::invalid_argument);
	EXPECT_THROW(parse_selector("T1.4(n=)"), std::invalid_argument);
}

TEST(RunSuite, Examples)
{
	auto reports = run_suite(primes_in_range(5, 7), {{"T1.1", std::nullopt}});
	ASSERT_EQ(reports.size(), 2u);
	for (const auto &r : reports)
		EXPECT_EQ(r.verdict, Verdict::Pass);

	reports = run_suite({5}, {{"T1.3", 1}, {"T1.4", 1}});
	ASSERT_EQ(reports.size(), 2u);
	EXPECT_EQ(reports[0].case_id, "T1.3");
	EXPECT_EQ(reports[0].verdict, Verdict::Pass);
	EXPECT_EQ(reports[1].case_id, "T1.4");
	EXPECT_EQ(reports[1].verdict, Verdict::Skip);

	EXPECT_TRUE(run_suite({5, 7}, {}).empty());
	EXPECT_THROW(run_suite({5}, {{"nope", std::nullopt}}), std::invalid_argument);
}

TEST(RunSuite, OrderingAndDeterminismAcrossWorkers)
{
	const auto primes = primes_upto(149);
	SuiteOptions one, many;
	many.workers = 8;
	auto a = run_suite(primes, all_cases(), one);
	auto b = run_suite(primes, all_cases(), many);
	ASSERT_EQ(a.size(), b.size());
	for (size_t i = 0; i < a.size(); ++i) {
		a[i].micros = b[i].micros = 0;
		ASSERT_EQ(a[i], b[i]) << i;
		if (i)
			ASSERT_FALSE(report_less(a[i], a[i - 1]));
	}
}

TEST(RunSuite, CorruptionHookFlipsOnlyTargets)
{
	SuiteOptions opt;
	opt.corrupt_rhs = {"L2.1b"};
	const auto reports = run_suite(primes_upto(61), all_cases(), opt);
	size_t flipped = 0;
	for (const auto &r : reports) {
		if (r.case_id == "L2.1b") {
			EXPECT_EQ(r.verdict, Verdict::Fail);
			++flipped;
		} else {
			EXPECT_NE(r.verdict, Verdict::Fail) << r.case_id << " p=" << r.prime;
		}
	}
	EXPECT_EQ(flipped, primes_upto(61).size());
}

TEST(RunSuite, ExplicitOutOfRangeParamsSkip)
{
	const auto reports = run_suite({7}, {{"KF.zs", 9}, {"L3.2a", 3}, {"T1.3", 0}});
	for (const auto &r : reports)
		EXPECT_EQ(r.verdict, Verdict::Skip) << r.case_id;
}

TEST(Properties, AllCasesPassUpTo199)
{
	const auto reports = run_suite(primes_upto(199), all_cases(), {.workers = 4});
	for (const auto &r : reports)
		ASSERT_NE(r.verdict, Verdict::Fail) << r.case_id << " " << r.params << " p=" << r.prime << " " << r.reason;
}

TEST(Properties, ModulusCoherence)
{
	const std::vector<std::pair<std::string, std::string>> pairs{{"T1.4", "T1.3"}, {"L3.1b", "L3.1a"}, {"L3.2b", "L3.2a"}};
	for (uint64_t p : primes_upto(199))
		for (const auto &[fine, coarse] : pairs)
			for (const auto &c : instances(find_family(fine), p, {})) {
				const CongruenceCase cc{&find_family(coarse), c.param};
				const auto ctx = build_context(p, [&] {
					auto o = required_orders({c, cc});
					o.insert(1);
					return o;
				}());
				const auto r2 = evaluate_case(c, ctx);
				if (r2.verdict == Verdict::Skip)
					continue;
				const auto r1 = evaluate_case(cc, ctx);
				ASSERT_NE(r1.verdict, Verdict::Skip) << fine << " applicable but " << coarse << " not, p=" << p;
				EXPECT_EQ(r2.lhs % p, r1.lhs) << fine << " p=" << p;
				EXPECT_EQ(r2.rhs % p, r1.rhs) << fine << " p=" << p;
			}
}

TEST(Properties, ZsSymmetryAndMirror)
{
	for (uint64_t p : primes_upto(61)) {
		const auto ctx = build_context(p, {1});
		const auto &zs = find_family("KF.zs");
		for (int64_t x = 0; x < static_cast<int64_t>(p); ++x) {
			const auto r = evaluate_case({&zs, x}, ctx);
			ASSERT_EQ(r.verdict, Verdict::Pass) << "p=" << p << " x=" << x;
			const int64_t mirror = (1 - x + static_cast<int64_t>(p)) % static_cast<int64_t>(p);
			const auto m = evaluate_case({&zs, mirror}, ctx);
			EXPECT_EQ(r.lhs, m.rhs);
			EXPECT_EQ(r.rhs, m.lhs);
		}
	}
}

TEST(Properties, T14ApplicabilityImpliesT13)
{
	const auto &t13 = find_family("T1.3");
	const auto &t14 = find_family("T1.4");
	for (uint64_t p : primes_upto(499))
		for (int64_t n = 1; n <= 10; ++n)
			if (!t14.skip_reason(p, n))
				EXPECT_FALSE(t13.skip_reason(p, n)) << p << " " << n;
}

TEST(Instances, ZsCoverage)
{
	const auto &zs = find_family("KF.zs");
	EXPECT_EQ(instances(zs, 61, {}).size(), 61u);
	EXPECT_EQ(instances(zs, 67, {}).size(), 1u);
	EXPECT_EQ(instances(find_family("L3.1a"), 101, {}).size(), 4u);
	EXPECT_EQ(instances(find_family("T1.1"), 101, {}).size(), 1u);
}

TEST(PrimesInRange, MatchesPrimalityTest)
{
	const auto ps = primes_in_range(0, 5000);
	size_t k = 0;
	for (uint64_t n = 0; n <= 5000; ++n)
		if (is_prime(n)) {
			ASSERT_LT(k, ps.size());
			ASSERT_EQ(ps[k++], n);
		}
	EXPECT_EQ(k, ps.size());
	EXPECT_EQ(primes_in_range(5, 5), std::vector<uint64_t>{5});
	EXPECT_TRUE(primes_in_range(24, 28).empty());
	EXPECT_EQ(primes_in_range(4294967200ULL, 4294967295ULL).back(), 4294967291ULL);
}
