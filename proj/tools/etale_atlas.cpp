#include <iostream>

#include "CLI11.hpp"
#include "atlas/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact group cohomology and etale/Lagrangian algebra classification"};
  app.require_subcommand(1, 1);
  atlas::RunConfig cfg;
  std::size_t degree = 0;
  std::uint32_t element = 0;
  std::string output;
  std::uint64_t seed = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"cohomology", "invariant factors and generators of H^n(G; Q/Z)"},
      {"lagrangian1", "Lagrangian algebras in Z1(Vect^omega_G)"},
      {"etale1", "connected etale algebras in Z1(Vect^omega_G)"},
      {"lagrangian2", "pointed Lagrangian algebras in Z1(2Vect^pi_G), trivial A"},
      {"etale2rep", "pointed connected etale algebras in 2Rep(G)"},
      {"etale2", "etale algebra skeleta in Z1(2Vect^pi_G)"},
      {"center", "conjugacy sectors of the Drinfeld center with transgressed twists"},
      {"transgress", "transgression of a cocycle to a centralizer"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--group", cfg.group_path, "group file")->required();
    sub->add_option("--cocycle", cfg.cocycle_path, "cocycle file");
    sub->add_option("--metric", cfg.metric_paths, "metric group file (repeatable)");
    sub->add_option("--degree", degree, "cohomological degree");
    sub->add_option("--element", element, "group element index");
    sub->add_option("--output", output, "write the report here instead of standard output");
    sub->add_flag("--verbose,-v", cfg.verbosity, "timing on standard error");
    sub->add_option("--seed", seed, "seed for the randomized self-check of 'cohomology'");
    sub->callback([&, sub, name = name] {
      cfg.command = name;
      if (sub->count("--degree")) cfg.degree = degree;
      if (sub->count("--element")) cfg.element = element;
      if (sub->count("--output")) cfg.output_path = output;
      if (sub->count("--seed")) cfg.seed = seed;
    });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : atlas::kExitInputError;
  }
  return atlas::run(cfg, std::cout, std::cerr);
}
