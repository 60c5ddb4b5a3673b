#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hcong/congruence_suite.hpp"

namespace hcong {

enum class OutputFormat { JsonLines, Csv, Table };

/// Throws std::invalid_argument for anything but "json", "csv" or "table".
OutputFormat parse_format(const std::string &name);

/// Fixed column order shared by the CSV header and the JSON object keys.
inline constexpr const char *kReportColumns = "prime,case,params,modulus,lhs,rhs,verdict,skip_reason,micros";

/// One JSON object, no trailing newline. lhs/rhs are decimal strings.
/// micros is written as 0 unless timing is set.
std::string json_line(const CongruenceReport &r, bool timing);

std::string csv_row(const CongruenceReport &r, bool timing);

void write_reports(std::ostream &os, const std::vector<CongruenceReport> &reports, OutputFormat format,
                   bool timing);

} // namespace hcong
