#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace renyi::cli {

enum class Command { Thermal, Entropy, Carnot, Clausius, Dpi, Selftest };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

// Parameters are kept as strings keyed by flag name without dashes ("alpha",
// "Th", "dq", ...) and converted when the command runs; a missing or
// ill-typed key raises ConfigError.
struct RunConfig {
  Command command = Command::Selftest;
  std::map<std::string, std::string> parameters;
  std::string output_path;  // empty: CSV goes to `out`
  std::uint64_t seed = 0;
};

// Summaries go to `out`, diagnostics to `err`. Returns 0 on success, 1 when a
// computation or self-test check fails, 2 on configuration errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SelftestSummary {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

// Invariant suite over all modules at reduced sample sizes. Prints one line
// per check to `log`.
SelftestSummary run_selftest(std::uint64_t seed, std::ostream& log);

}  // namespace renyi::cli
