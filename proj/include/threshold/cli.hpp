#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "threshold/counting.hpp"

namespace threshold {

/// Parsed command line. Exactly one subcommand is set before dispatch.
struct CliConfig {
  std::string subcommand;
  std::string code;
  bool ab_input = false;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::string kind = "matchings";      // extremal
  std::string objective = "matchings";  // reduce
  std::string theorem;                  // verify
  std::string format = "text";          // json, csv, text; dot, edge-list for export
  OracleLimits limits;
  bool check_oracle = false;
  std::size_t workers = 1;
  std::size_t prefix_len = 0;  // 0: library default
  std::string checkpoint;
  std::uint64_t max_codes = 0;
  bool timing = false;
  std::string output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `thresh` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on a failed verification or a counterexample, 2
/// on a usage error (reported on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threshold
