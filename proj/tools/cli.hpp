#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vcgroup::cli {

struct CliConfig {
  std::string command;

  // Shared by every subcommand.
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string out;
  std::string format = "csv";

  std::string group;
  std::string table;
  std::string set_hex;
  std::string u_hex;
  std::string k_hex;
  std::optional<double> p;
  std::string model = "bernoulli";
  std::string family = "translates";
  std::vector<std::size_t> sizes;
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::vector<std::uint64_t> primes;
  bool congruent = false;
  std::uint64_t max_prime = 1009;
  bool shortcut = false;
  bool print_vcdim = false;
  std::string summary;
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
};

struct ParseOutcome {
  std::optional<CliConfig> config;  // empty when parsing ended the run
  int exit_code = 0;
};

/// Parses and validates argv. Help text and usage errors are written to
/// out and err; in that case the outcome carries no config.
ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out,
                        std::ostream& err);

/// Runs a parsed command. Returns 0 iff it finished without error records.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// "5,7,11" or an inclusive range "5-101" (primes only).
std::vector<std::uint64_t> parse_primes(const std::string& text);

}  // namespace vcgroup::cli
