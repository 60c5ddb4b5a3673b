#include "hcong/cli.hpp"

#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hcong/tables.hpp"

namespace hcong {

namespace {

void parse_prime_range(const std::string &text, RunConfig &config)
{
	static const std::regex range(R"(^\s*([0-9]+)\s*(?:\.\.\s*([0-9]+))?\s*$)");
	std::smatch m;
	if (!std::regex_match(text, m, range))
		throw UsageError("--primes expects LO..HI, got '" + text + "'");
	try {
		config.lower = std::stoull(m[1]);
		config.upper = m[2].matched ? std::stoull(m[2]) : config.lower;
	} catch (const std::out_of_range &) {
		throw UsageError("--primes bound out of range");
	}
}

std::vector<std::string> split_list(const std::string &text)
{
	// commas inside "ID(n=1)" never occur, so a flat split is enough
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		if (!item.empty())
			out.push_back(item);
	return out;
}

void add_verify_options(CLI::App &app, RunConfig &config, std::string &primes, std::string &cases,
                        std::string &format, std::string &corrupt)
{
	app.add_option("--primes", primes, "inclusive prime range LO..HI")->capture_default_str();
	app.add_option("--cases", cases, "'all' or comma-separated ids, e.g. T1.1,T1.4(n=2)")->capture_default_str();
	app.add_option("--max-n", config.bounds.max_n, "largest n for T1.3/T1.4")->capture_default_str();
	app.add_option("--max-m", config.bounds.max_m, "largest even m for the L3 cases")->capture_default_str();
	app.add_option("--max-psum", config.bounds.max_psum, "largest n for KF.psum*")->capture_default_str();
	app.add_option("--max-powmod", config.bounds.max_powmod, "largest n for KF.powmod")->capture_default_str();
	app.add_option("--zs-full-upto", config.bounds.zs_full_upto, "run KF.zs for every x up to this prime")
	    ->capture_default_str();
	app.add_option("--oracle-upto", config.oracle_upto, "cross-check against exact arithmetic up to this prime (0: off)")
	    ->capture_default_str();
	app.add_option("--format", format, "json, csv or table")->capture_default_str();
	app.add_option("--output", config.output_path, "output file (default: standard output)");
	app.add_option("--workers", config.workers, "worker threads")->capture_default_str();
	app.add_flag("--timing", config.timing, "report per-record microseconds (otherwise 0)");
	app.add_option("--corrupt-rhs", corrupt, "test hook: add 1 to the right side of these case ids");
}

void finish_verify(RunConfig &config, const std::string &primes, const std::string &cases, const std::string &format,
                   const std::string &corrupt)
{
	parse_prime_range(primes, config);
	try {
		config.format = parse_format(format);
		config.cases.clear();
		if (cases != "all")
			for (const auto &item : split_list(cases))
				config.cases.push_back(parse_selector(item));
		for (const auto &id : split_list(corrupt))
			config.corrupt_rhs.insert(find_family(id).id);
	} catch (const std::invalid_argument &e) {
		throw UsageError(e.what());
	}
	validate(config);
}

} // namespace

void validate(const RunConfig &c)
{
	if (c.lower < 5)
		throw UsageError("prime range lower bound must be >= 5");
	if (c.upper < c.lower)
		throw UsageError("prime range upper bound below lower bound");
	if (c.upper >= (uint64_t{1} << 32))
		throw UsageError("prime range upper bound must be below 2^32");
	if (c.bounds.max_n < 1)
		throw UsageError("--max-n must be >= 1");
	if (c.bounds.max_m < 2 || c.bounds.max_m % 2 != 0)
		throw UsageError("--max-m must be even and >= 2");
	if (c.workers < 1)
		throw UsageError("--workers must be >= 1");
}

RunConfig parse_verify_args(const std::vector<std::string> &args)
{
	RunConfig config;
	std::string primes = "5..997", cases = "all", format = "json", corrupt;
	CLI::App app{"verify harmonic-number congruences over a prime range", "verify"};
	add_verify_options(app, config, primes, cases, format, corrupt);
	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		throw UsageError(e.what());
	}
	finish_verify(config, primes, cases, format, corrupt);
	return config;
}

int execute(const RunConfig &config, std::ostream &out, std::ostream &err)
{
	std::vector<CongruenceReport> reports;
	try {
		SuiteOptions options;
		options.bounds = config.bounds;
		options.workers = config.workers;
		options.oracle_upto = config.oracle_upto;
		options.corrupt_rhs = config.corrupt_rhs;
		const auto cases = config.cases.empty() ? all_cases() : config.cases;
		reports = run_suite(primes_in_range(config.lower, config.upper), cases, options);
	} catch (const std::exception &e) {
		err << "internal error: " << e.what() << '\n';
		return kExitInternal;
	}

	if (config.output_path.empty()) {
		write_reports(out, reports, config.format, config.timing);
		out.flush();
		if (!out) {
			err << "error writing to standard output\n";
			return kExitInternal;
		}
	} else {
		std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
		if (!file) {
			err << "cannot open '" << config.output_path << "' for writing\n";
			return kExitInternal;
		}
		write_reports(file, reports, config.format, config.timing);
		file.close();
		if (!file) {
			err << "error writing '" << config.output_path << "'\n";
			return kExitInternal;
		}
	}

	for (const auto &r : reports)
		if (r.verdict == Verdict::Fail)
			return kExitFail;
	return kExitOk;
}

void list_cases(std::ostream &os)
{
	for (const auto &f : registry()) {
		std::string id = f.id;
		if (f.param != '\0')
			id += fmt::format("({})", f.param);
		os << fmt::format("{:<18} mod {:<4} [{}] {}: {}\n", id, f.exponent == 2 ? "p^2" : "p", f.predicate, f.anchor,
		                  f.statement);
	}
}

int run_cli(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"hcong: verify harmonic-number and Bernoulli-number congruences for concrete primes", "hcong"};
	app.require_subcommand(1);

	RunConfig config;
	std::string primes = "5..997", cases = "all", format = "json", corrupt;
	CLI::App *verify = app.add_subcommand("verify", "scan a prime range and report every congruence case");
	add_verify_options(*verify, config, primes, cases, format, corrupt);

	CLI::App *list = app.add_subcommand("list-cases", "print the case registry");

	uint64_t bern_prime = 0;
	long bern_index = -1, bern_exact = -1;
	CLI::App *bern = app.add_subcommand("bernoulli", "print B_J mod P, or the exact B_N");
	auto *opt_prime = bern->add_option("--prime", bern_prime, "prime P");
	auto *opt_index = bern->add_option("--index", bern_index, "index J, 0 <= J <= P-3");
	auto *opt_exact = bern->add_option("--exact", bern_exact, "index N for the exact value");
	opt_prime->needs(opt_index);
	opt_index->needs(opt_prime);
	opt_exact->excludes(opt_prime)->excludes(opt_index);

	std::vector<std::string> reversed(argv.rbegin(), argv.rend());
	if (!reversed.empty())
		reversed.pop_back(); // program name
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError &e) {
		err << "usage error: " << e.what() << '\n' << app.help();
		return kExitUsage;
	}

	if (verify->parsed()) {
		try {
			finish_verify(config, primes, cases, format, corrupt);
		} catch (const UsageError &e) {
			err << "usage error: " << e.what() << '\n';
			return kExitUsage;
		}
		return execute(config, out, err);
	}

	if (list->parsed()) {
		list_cases(out);
		return kExitOk;
	}

	try {
		if (*opt_exact) {
			if (bern_exact < 0)
				throw UsageError("--exact must be >= 0");
			out << bernoulli_exact(bern_exact)[bern_exact] << '\n';
			return kExitOk;
		}
		if (!*opt_prime)
			throw UsageError("bernoulli needs --prime P --index J or --exact N");
		if (bern_prime < 5 || !is_prime(bern_prime))
			throw UsageError("--prime must be a prime >= 5");
		if (bern_index < 0 || bern_index > static_cast<long>(bern_prime) - 3)
			throw UsageError("--index must lie in [0, P-3]");
		out << bernoulli_mod_p(bern_prime)[static_cast<size_t>(bern_index)].value() << '\n';
		return kExitOk;
	} catch (const UsageError &e) {
		err << "usage error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const std::exception &e) {
		err << "internal error: " << e.what() << '\n';
		return kExitInternal;
	}
}

} // namespace hcong
