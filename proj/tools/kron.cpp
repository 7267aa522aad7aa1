#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "kron/cli/commands.hpp"
#include "kron/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"kron: generic characteristic polynomials and monogenicity checks"};
  app.require_subcommand(1);

  kron::CommandOptions opts;
  std::string primes;
  std::string file;
  bool no_timing = false;
  try {
    opts.budget = kron::default_budget();
  } catch (const kron::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kron::kExitInput;
  }

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gcp", "print the generic characteristic polynomial"},
      {"check", "local simplicity verdict and injectivity certificate"},
      {"hilbert", "run the theorem 33/34/35 checks"},
      {"norm-form", "print the norm form N(xi)"},
      {"comaximal", "find a comaximal shift for P(T+x), Q(T)"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "input JSON document")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", opts.json, "emit a JSON report");
    sub->add_option("--primes", primes, "comma-separated primes, e.g. 2,3,5");
    sub->add_option("--seed", opts.seed, "seed for randomized steps");
    sub->add_option("--budget", opts.budget, "search budget (default from KRON_BUDGET or 2^20)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-timing", no_timing, "omit timing from the output");
    if (name == "norm-form") sub->add_flag("--smoke", opts.smoke, "try a low-degree factorization");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kron::kExitInput;
  }
  opts.timing = !no_timing;
  if (!primes.empty()) {
    try {
      opts.primes = kron::parse_prime_list(primes);
    } catch (const kron::InvalidInput& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kron::kExitInput;
    }
  }
  const auto out = kron::run_command(app.get_subcommands().front()->get_name(), file, opts);
  std::fwrite(out.text.data(), 1, out.text.size(), stdout);
  return out.exit_code;
}
