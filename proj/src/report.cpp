#include "hcong/report.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace hcong {

OutputFormat parse_format(const std::string &name)
{
	if (name == "json" || name == "jsonl" || name == "json-lines")
		return OutputFormat::JsonLines;
	if (name == "csv")
		return OutputFormat::Csv;
	if (name == "table")
		return OutputFormat::Table;
	throw std::invalid_argument("unknown output format '" + name + "' (expected json, csv or table)");
}

std::string json_line(const CongruenceReport &r, bool timing)
{
	nlohmann::ordered_json j;
	j["prime"] = r.prime;
	j["case"] = r.case_id;
	j["params"] = r.params;
	j["modulus"] = r.modulus;
	j["lhs"] = std::to_string(r.lhs);
	j["rhs"] = std::to_string(r.rhs);
	j["verdict"] = to_string(r.verdict);
	j["skip_reason"] = r.reason;
	j["micros"] = timing ? r.micros : 0;
	return j.dump();
}

namespace {

std::string csv_field(const std::string &s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

} // namespace

std::string csv_row(const CongruenceReport &r, bool timing)
{
	return fmt::format("{},{},{},{},{},{},{},{},{}", r.prime, csv_field(r.case_id), csv_field(r.params), r.modulus,
	                   r.lhs, r.rhs, to_string(r.verdict), csv_field(r.reason), timing ? r.micros : 0);
}

void write_reports(std::ostream &os, const std::vector<CongruenceReport> &reports, OutputFormat format, bool timing)
{
	switch (format) {
	case OutputFormat::JsonLines:
		for (const auto &r : reports)
			os << json_line(r, timing) << '\n';
		break;
	case OutputFormat::Csv:
		os << kReportColumns << '\n';
		for (const auto &r : reports)
			os << csv_row(r, timing) << '\n';
		break;
	case OutputFormat::Table: {
		size_t case_w = 4, param_w = 6, num_w = 3;
		for (const auto &r : reports) {
			case_w = std::max(case_w, r.case_id.size());
			param_w = std::max(param_w, r.params.size());
			num_w = std::max({num_w, std::to_string(r.modulus).size()});
		}
		os << fmt::format("{:>7}  {:<{}}  {:<{}}  {:>{}}  {:>{}}  {:>{}}  {:<7}  {}\n", "prime", "case", case_w,
		                  "params", param_w, "mod", num_w, "lhs", num_w, "rhs", num_w, "verdict", "reason");
		size_t pass = 0, fail = 0, skip = 0;
		for (const auto &r : reports) {
			os << fmt::format("{:>7}  {:<{}}  {:<{}}  {:>{}}  {:>{}}  {:>{}}  {:<7}  {}\n", r.prime, r.case_id, case_w,
			                  r.params, param_w, r.modulus, num_w, r.lhs, num_w, r.rhs, num_w, to_string(r.verdict),
			                  r.reason);
			(r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : skip)++;
		}
		os << fmt::format("{} records: {} pass, {} fail, {} skip\n", reports.size(), pass, fail, skip);
		break;
	}
	}
}

} // namespace hcong
