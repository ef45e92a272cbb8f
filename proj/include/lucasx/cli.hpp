#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lucasx::cli {

/// Parsed command line. `subcommand` is e.g. "lucas" or "scheme synth".
struct CliConfig {
  std::string subcommand;
  std::string P;
  std::string Q = "1";
  std::string vars;
  std::vector<std::uint64_t> primes;
  unsigned r = 1;
  std::size_t n_max = 100;
  std::size_t m_max = 10;
  std::string output;
  std::string scheme_path;
  bool signed_output = false;
  std::string method = "direct";
  std::string oracle;
  std::uint64_t bound = 100;
  std::size_t max_states = 64;
};

enum ExitCode : int { kPass = 0, kCounterexample = 1, kUsage = 2 };

/// Executes a parsed configuration, writing results to `out` and
/// diagnostics to `err`.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker threads for independent per-prime checks: LUCASX_THREADS if set,
/// else the hardware concurrency.
unsigned thread_count();

}  // namespace lucasx::cli
