#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aoc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Puzzle solvers and instance generators built on a CDCL SAT core"};
  app.require_subcommand(0, 1);

  aoc::RunConfig cfg;
  app.add_option("day", cfg.day, "puzzle day: 16, 17, 21, 23 or 24");
  app.add_option("part", cfg.part, "puzzle part: 1 or 2");
  app.add_option("--input", cfg.input_path, "input file (default: stdin)");
  app.add_option("--solver", cfg.solver,
                 "engine override; accepted names depend on the day");
  app.add_option("--layers", cfg.layers,
                 "day 21: directional keypad layers (default 2 / 25)");
  app.add_option("--trainings", cfg.trainings,
                 "day 24 part 2: initial training-input count (default: auto)");
  app.add_option("--pairs", cfg.pairs,
                 "day 24 part 2: swapped pair count (default 4)");
  app.add_option("--seed", cfg.seed, "day 24 part 2: training-input seed");
  app.add_option("--dimacs", cfg.dimacs_path,
                 "write the base CNF of a SAT run to this file before solving");
  app.add_option("--bv-width", cfg.bv_width,
                 "day 17 part 2: bit-vector width override");
  app.add_option("--target", cfg.target, "day 17 part 2: explicit target codes")
      ->delimiter(',');

  aoc::GenConfig gen_cfg;
  CLI::App* gen = app.add_subcommand(
      "gen", "emit a random adder circuit with swapped gate outputs");
  gen->add_option("--bits", gen_cfg.bits, "adder width in bits")->required();
  gen->add_option("--pairs", gen_cfg.pairs, "swapped pair count (default 4)");
  gen->add_option("--seed", gen_cfg.seed, "generator seed (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // help/version exit cleanly; real errors are usage
    return rc == 0 ? 0 : 2;
  }

  if (gen->parsed()) return aoc::run_gen(gen_cfg, std::cout, std::cerr);
  return aoc::run(cfg, std::cout, std::cerr);
}
