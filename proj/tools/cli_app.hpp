#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctqw::cli {

/// Exit statuses of the front end.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,  // verify found a deviation above tolerance
  kParseError = 2,
  kNotQD = 3,
  kNumerical = 4,
};

/// "a:b:steps" (steps evenly spaced points from a to b inclusive) or "t1,t2,...".
std::vector<double> parse_time_grid(const std::string& text);

/// "a:b:step" integer range (inclusive) or "n1,n2,...".
std::vector<std::size_t> parse_int_range(const std::string& text);

/// Runs one command line. Results go to `out` (or the --out file); errors are
/// written to `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctqw::cli
