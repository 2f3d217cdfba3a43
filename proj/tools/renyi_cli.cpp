#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "renyi/cli.hpp"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

// Flags each subcommand accepts; values are forwarded as strings and typed by
// renyi::cli::run.
const std::map<std::string, std::vector<Flag>>& command_flags() {
  static const std::map<std::string, std::vector<Flag>> flags{
      {"thermal",
       {{"H", "Hamiltonian: diag:a,b,... or matrix file"},
        {"beta", "inverse temperature"},
        {"alpha", "Renyi order"}}},
      {"entropy",
       {{"rho", "state: diag:a,b,... or matrix file"},
        {"sigma", "reference state for relative entropies"},
        {"H", "Hamiltonian for the Renyi internal energy"},
        {"alpha", "Renyi order"}}},
      {"carnot",
       {{"Th", "hot temperature"},
        {"Tc", "cold temperature"},
        {"alpha", "Renyi order"},
        {"steps", "isotherm steps (default 10000)"},
        {"gamma1", "start of the hot isotherm (default 2)"},
        {"gamma2", "end of the hot isotherm (default 1)"},
        {"family", "thermal or deformed (default thermal)"},
        {"variant", "free energy route: traditional or sandwiched"}}},
      {"clausius",
       {{"dq", "variation size"},
        {"p0", "ground population (default 0.7)"},
        {"E1", "excited energy (default 1)"},
        {"alphas", "comma separated alpha grid (default 0.1..5.0)"}}},
      {"dpi",
       {{"dim", "dimension (default 2)"},
        {"samples", "channels per alpha (default 200)"},
        {"beta", "inverse temperature of the fixed state"},
        {"E1", "level spacing (default 1)"},
        {"alphas", "comma separated alpha grid"}}},
      {"selftest", {}},
  };
  return flags;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi quantum thermodynamics toolkit"};
  app.require_subcommand(1);

  std::map<std::string, std::map<std::string, std::string>> values;
  std::string out_path;
  std::uint64_t seed = 0;
  for (const auto& [command, flags] : command_flags()) {
    CLI::App* sub = app.add_subcommand(command);
    auto& store = values[command];
    for (const Flag& f : flags) {
      sub->add_option_function<std::string>(
          std::string("--") + f.name, [&store, name = std::string(f.name)](const std::string& v) {
            store[name] = v;
          },
          f.help);
    }
    sub->add_option("--out", out_path, "write CSV here instead of standard output");
    sub->add_option("--seed", seed, "random seed");
  }

  CLI11_PARSE(app, argc, argv);

  renyi::cli::RunConfig config;
  const std::string name = app.get_subcommands().front()->get_name();
  config.command = *renyi::cli::parse_command(name);
  config.parameters = values[name];
  config.output_path = out_path;
  config.seed = seed;
  return renyi::cli::run(config, std::cout, std::cerr);
}
