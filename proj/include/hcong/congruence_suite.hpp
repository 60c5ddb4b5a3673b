#pragma once

// Registry of congruence cases and the machinery to evaluate them for a prime.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hcong/exact_arith.hpp"
#include "hcong/sums.hpp"
#include "hcong/tables.hpp"

namespace hcong {

struct Sides {
	Residue lhs;
	Residue rhs;
};

/// What the naive exact evaluators get to work with.
struct ExactContext {
	uint64_t p;
	const BernoulliSeq &bern;
};

struct ParamBounds {
	int max_n = 4;
	int max_m = 8;
	int max_psum = 10;
	int max_powmod = 12;
	/// KF.zs runs every x in [0, p) up to this prime, and only x = 2 beyond.
	uint64_t zs_full_upto = 61;
};

struct CaseFamily {
	std::string id;
	/// 'n', 'm', 'x', or '\0' for an unparameterized case.
	char param = '\0';
	/// 1: congruence mod p, 2: mod p^2.
	int exponent = 1;
	std::string statement;
	std::string anchor;
	std::string predicate;
	/// Empty when applicable, otherwise the reason to skip.
	std::function<std::optional<std::string>(uint64_t p, int64_t v)> skip_reason;
	std::function<std::set<int>(int64_t v)> orders;
	/// Parameter values to run at prime p when the whole family is selected.
	std::function<std::vector<int64_t>(uint64_t p, const ParamBounds &)> values;
	/// Fast residue path. Both evaluators return sides mod p^exponent.
	std::function<Sides(const PrimeContext &, int64_t v)> fast;
	/// Literal summation in exact rationals.
	std::function<Sides(const ExactContext &, int64_t v)> exact;
	/// Naive exact path is cubic in p.
	bool triple_sum = false;
};

/// All case families in registry order.
const std::vector<CaseFamily> &registry();

/// Throws std::invalid_argument for an unknown id.
const CaseFamily &find_family(const std::string &id);

/// A family together with one parameter value.
struct CongruenceCase {
	const CaseFamily *family;
	std::optional<int64_t> param;

	const std::string &id() const { return family->id; }
	/// "n=2", "x=0", or "" when unparameterized.
	std::string params_string() const;
	int64_t param_value() const { return param.value_or(0); }
};

enum class Verdict { Pass, Fail, Skip };

std::string to_string(Verdict v);

struct CongruenceReport {
	uint64_t prime = 0;
	std::string case_id;
	std::string params;
	std::optional<int64_t> param;
	uint64_t modulus = 0;
	uint64_t lhs = 0;
	uint64_t rhs = 0;
	Verdict verdict = Verdict::Skip;
	/// Skip reason, or the diagnostic attached to a failure.
	std::string reason;
	int64_t micros = 0;

	friend bool operator==(const CongruenceReport &, const CongruenceReport &) = default;
};

/// Orders records by (prime, case id, parameter).
bool report_less(const CongruenceReport &a, const CongruenceReport &b);

/// Fast O(p) evaluation. Throws MissingOrder if ctx lacks a harmonic order
/// the case needs; PDividesDenominator becomes a failing report.
CongruenceReport evaluate_case(const CongruenceCase &c, const PrimeContext &ctx);

/// reduce(coeff) * p^{p_factor} * B_{p-1-offset}, in the mod p^exponent ring.
/// B is only known mod p, so exponent 2 requires p_factor 1.
Residue rhs_bernoulli_multiple(const PrimeContext &ctx, const BigRational &coeff, int64_t offset, int p_factor,
                               int exponent);

/// Parameter instances of a family at prime p.
std::vector<CongruenceCase> instances(const CaseFamily &family, uint64_t p, const ParamBounds &bounds);

/// One entry of a case selection: a whole family, or a single instance.
struct CaseSelector {
	std::string id;
	std::optional<int64_t> param;
};

/// Parses "ID" or "ID(name=value)". Throws std::invalid_argument.
CaseSelector parse_selector(const std::string &text);

std::vector<CaseSelector> all_cases();

/// Harmonic orders needed to evaluate these cases.
std::set<int> required_orders(const std::vector<CongruenceCase> &cases);

class Oracle;

struct SuiteOptions {
	ParamBounds bounds;
	unsigned workers = 1;
	/// Cross-check against the exact oracle for p <= oracle_upto (0 disables).
	uint64_t oracle_upto = 0;
	/// Test hook: these families get rhs + 1.
	std::set<std::string> corrupt_rhs;
};

/// Evaluates every selected case at every prime, one PrimeContext per prime.
/// Per-case errors end up in reports; output order is deterministic.
std::vector<CongruenceReport> run_suite(const std::vector<uint64_t> &primes, const std::vector<CaseSelector> &cases,
                                        const SuiteOptions &options = {});

/// Primes in [lo, hi] by segmented sieve.
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

} // namespace hcong
