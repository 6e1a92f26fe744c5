#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fraclab::cli {

/// Exit codes of dispatch.
enum ExitCode : int { kOk = 0, kUsageOrDomain = 1, kToleranceFailure = 2 };

/// Runs one subcommand. args excludes the program name. Points given as "-" are read from
/// `in`; results go to `out` unless --out is set; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

/// Parses "a:step:b" (inclusive) or a comma list.
std::vector<double> parse_orders(const std::string& text);

}  // namespace fraclab::cli
