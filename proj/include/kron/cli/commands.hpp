#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace kron {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CommandOptions {
  bool json = false;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;
  std::uint64_t budget = std::uint64_t{1} << 20;
  bool timing = true;
  /// norm-form: also run the low-degree irreducibility search.
  bool smoke = false;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

/// Budget from KRON_BUDGET, or the default when unset. Throws on garbage.
std::uint64_t default_budget();

/// Parses "2,3,5"; throws InvalidInput on anything else.
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

/// Runs one subcommand (gcp, check, hilbert, norm-form, comaximal) on an
/// input file. Never throws: input errors map to exit 2, budget to exit 3.
CommandOutput run_command(const std::string& command, const std::string& path, const CommandOptions& opts);

}  // namespace kron
