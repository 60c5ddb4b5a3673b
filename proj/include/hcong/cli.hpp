#pragma once

// Command-line front end: `verify`, `list-cases`, `bernoulli`.

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcong/congruence_suite.hpp"
#include "hcong/report.hpp"

namespace hcong {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

class UsageError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct RunConfig {
	uint64_t lower = 5;
	uint64_t upper = 997;
	/// Empty means every registry family.
	std::vector<CaseSelector> cases;
	ParamBounds bounds;
	uint64_t oracle_upto = 97;
	OutputFormat format = OutputFormat::JsonLines;
	/// Empty writes to standard output.
	std::string output_path;
	unsigned workers = 1;
	bool timing = false;
	std::set<std::string> corrupt_rhs;
};

/// Checks the RunConfig invariants; throws UsageError.
void validate(const RunConfig &config);

/// Parses the arguments following `verify`. Throws UsageError.
RunConfig parse_verify_args(const std::vector<std::string> &args);

/// Runs the scan and writes reports. Returns 0 (all pass/skip), 1 (some
/// fail) or 3 (I/O or internal error).
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

/// One line per registry family.
void list_cases(std::ostream &os);

/// Entry point shared by the executable and the tests.
int run_cli(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

} // namespace hcong
