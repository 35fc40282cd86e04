#include "aoc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "aoc/days/ccrev.hpp"
#include "aoc/days/clique.hpp"
#include "aoc/days/keypad.hpp"
#include "aoc/days/maze.hpp"
#include "aoc/days/wires.hpp"
#include "aoc/errors.hpp"
#include "aoc/sat/dimacs.hpp"

namespace aoc {

namespace {

constexpr int kOk = 0, kInfeasible = 1, kUsage = 2;

int usage(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return kUsage;
}

std::optional<std::string> read_input(const RunConfig& cfg, std::ostream& err) {
  std::ostringstream buf;
  if (cfg.input_path.empty()) {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
      err << "error: cannot read input file '" << cfg.input_path << "'\n";
      return std::nullopt;
    }
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[static_cast<size_t>(i)]);
  }
  return s;
}

std::string join_strings(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s;
}

std::vector<std::string> parse_code_lines(const std::string& text) {
  std::vector<std::string> codes;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) codes.push_back(line);
  }
  return codes;
}

// The solver choices each (day, part) accepts; the first entry is the
// default.  Days without alternatives accept only the default engine.
std::vector<std::string> solver_choices(int day, int part) {
  if (day == 16 && part == 2) return {"main", "oracle"};
  if (day == 17 && part == 2) return {"sat", "oracle"};
  if (day == 23 && part == 2) return {"sat", "oracle"};
  if (day == 24 && part == 2) return {"sat", "structural"};
  return {"main"};
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.day != 16 && cfg.day != 17 && cfg.day != 21 && cfg.day != 23 && cfg.day != 24)
    return usage(err, "day must be one of 16, 17, 21, 23, 24");
  if (cfg.part != 1 && cfg.part != 2) return usage(err, "part must be 1 or 2");

  auto choices = solver_choices(cfg.day, cfg.part);
  std::string solver = cfg.solver.empty() ? choices.front() : cfg.solver;
  if (std::find(choices.begin(), choices.end(), solver) == choices.end())
    return usage(err, "solver '" + solver + "' is not available for day " +
                          std::to_string(cfg.day) + " part " + std::to_string(cfg.part));

  if (cfg.layers >= 0 && cfg.day != 21) return usage(err, "--layers applies to day 21 only");
  if ((cfg.trainings != 0 || cfg.pairs >= 0) && !(cfg.day == 24 && cfg.part == 2))
    return usage(err, "--trainings/--pairs apply to day 24 part 2 only");
  if ((cfg.bv_width != 0 || !cfg.target.empty()) && !(cfg.day == 17 && cfg.part == 2))
    return usage(err, "--bv-width/--target apply to day 17 part 2 only");
  bool sat_run = solver == "sat";
  if (!cfg.dimacs_path.empty() && !sat_run)
    return usage(err, "--dimacs requires a SAT-solver run");

  std::ofstream dimacs_out;
  if (!cfg.dimacs_path.empty()) {
    dimacs_out.open(cfg.dimacs_path, std::ios::binary | std::ios::trunc);
    if (!dimacs_out) return usage(err, "cannot write '" + cfg.dimacs_path + "'");
  }
  auto dump_cnf = [&](sat::CnfInstance& inst) {
    if (dimacs_out.is_open()) {
      dimacs_out << sat::write_dimacs(inst);
      dimacs_out.close();
    }
  };

  auto text = read_input(cfg, err);
  if (!text) return kUsage;

  try {
    switch (cfg.day) {
      case 16: {
        days::Maze m = days::parse_maze(*text);
        std::optional<int64_t> ans = cfg.part == 1           ? days::maze_min_cost(m)
                                     : solver == "oracle" ? days::via_point_oracle(m)
                                                          : days::optimal_tiles(m);
        if (!ans) {
          err << "no route from start to end\n";
          return kInfeasible;
        }
        out << *ans << "\n";
        return kOk;
      }
      case 17: {
        days::Device dev = days::parse_device(*text);
        if (cfg.part == 1) {
          out << join_ints(days::run(dev.program, dev.a, dev.b, dev.c)) << "\n";
          return kOk;
        }
        for (int code : cfg.target)
          if (code < 0 || code > 7) return usage(err, "target codes must be within 0..7");
        std::span<const int> target(cfg.target.empty() ? dev.program : cfg.target);
        std::optional<uint64_t> a;
        if (solver == "oracle") {
          a = days::reverse_min_a_dfs(dev.program, target);
        } else {
          days::SatReverseOptions opts;
          opts.width = cfg.bv_width;
          opts.on_encoded = dump_cnf;
          a = days::reverse_min_a_sat(dev.program, target, opts);
        }
        if (!a) {
          err << "no initial A produces the target\n";
          return kInfeasible;
        }
        out << *a << "\n";
        return kOk;
      }
      case 21: {
        std::vector<std::string> codes = parse_code_lines(*text);
        if (codes.empty()) return usage(err, "no codes in input");
        int layers = cfg.layers >= 0 ? cfg.layers : cfg.part == 1 ? 2 : 25;
        out << days::complexity_sum(codes, layers) << "\n";
        return kOk;
      }
      case 23: {
        days::LanGraph g = days::parse_lan(*text);
        if (cfg.part == 1) {
          out << days::count_t_triangles(g) << "\n";
          return kOk;
        }
        std::vector<int> clique =
            solver == "oracle" ? days::max_clique_bk(g) : days::max_clique_sat(g, dump_cnf);
        out << days::lan_password(g, clique) << "\n";
        return kOk;
      }
      case 24: {
        days::Circuit c = days::parse_circuit(*text);
        if (cfg.part == 1) {
          out << days::eval_circuit(c) << "\n";
          return kOk;
        }
        if (solver == "structural") {
          out << join_strings(days::ripple_structural_check(c)) << "\n";
          return kOk;
        }
        days::SwapSearchOptions opts;
        opts.trainings = cfg.trainings;
        opts.seed = cfg.seed;
        opts.on_encoded = dump_cnf;
        auto wires = days::find_swaps_sat(c, cfg.pairs < 0 ? 4 : cfg.pairs, opts);
        if (!wires) {
          err << "no consistent swap set\n";
          return kInfeasible;
        }
        out << join_strings(*wires) << "\n";
        return kOk;
      }
      default: return usage(err, "unhandled day");
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const days::ShapeError& e) {
    err << "unsupported program shape: " << e.what() << "\n";
    return kUsage;
  } catch (const days::ExecError& e) {
    err << "execution error: " << e.what() << "\n";
    return kUsage;
  } catch (const days::EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    return usage(err, e.what());
  }
}

int run_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    days::GenResult res = days::gen_instance(cfg.bits, cfg.pairs, cfg.seed);
    out << res.text;
    std::string joined = join_strings(res.swapped);
    out << (joined.empty() ? "# answer:" : "# answer: " + joined) << "\n";
    return kOk;
  } catch (const std::invalid_argument& e) {
    return usage(err, e.what());
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  }
}

}  // namespace aoc
