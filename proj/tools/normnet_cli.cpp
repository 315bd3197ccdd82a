// Copyright 2026 The normnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "normnet/generator.hpp"
#include "normnet/io.hpp"
#include "normnet/sweep.hpp"

namespace {

// Exit codes: 0 optimal/valid, 1 no optimum proven (infeasible or node limit),
// 2 input/validation error, 3 usage error.
constexpr int kExitOk = 0;
constexpr int kExitNoOptimum = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    normnet::fail(normnet::Errc::kInvalidParams,
                  "cannot read file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    normnet::fail(normnet::Errc::kInvalidParams,
                  "cannot write file '" + path + "'");
  }
  out << content;
}

normnet::Rational parse_rational_arg(const std::string& text,
                                     const std::string& flag) {
  auto parsed = normnet::parse_rational(text);
  if (!parsed) {
    throw UsageError(flag + ": cannot parse '" + text + "' as a number");
  }
  return *parsed;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

// Flags shared by solve, export-lp and sweep.
struct SolveArgs {
  std::string file;
  std::string problem = "mnsp";
  std::string representation = "inclusion";
  std::string budget;
  std::string weights;
  std::string in_force = "flexible";
  bool all_optima = false;
  std::size_t max_optima = 64;
  std::uint64_t node_limit = 0;
  bool json = false;
};

void add_solve_flags(CLI::App* cmd, SolveArgs* args) {
  cmd->add_option("file", args->file, "norm net JSON document")->required();
  cmd->add_option("--problem", args->problem, "mnsp | mnsplb | vmnsplb");
  cmd->add_option("--representation", args->representation,
                  "inclusion | generalisation | custom:<file>");
  cmd->add_option("--budget", args->budget,
                  "budget (exact: 5, 7/2, 3.5); required unless mnsp");
  cmd->add_option("--weights", args->weights,
                  "wr,wc or wr,wc,wv as exact decimals or fractions");
  cmd->add_option("--in-force", args->in_force,
                  "ignore | preserve | flexible (default flexible)");
  cmd->add_flag("--all-optima", args->all_optima,
                "enumerate all optimal systems (up to --max-optima)");
  cmd->add_option("--max-optima", args->max_optima,
                  "cap on enumerated optima (default 64)");
  cmd->add_option("--node-limit", args->node_limit,
                  "abort after this many search nodes");
}

normnet::ProblemConfig build_config(const SolveArgs& args,
                                    const normnet::NormNetDocument& doc) {
  normnet::ProblemConfig config;
  auto problem = normnet::problem_from_name(args.problem);
  if (!problem) throw UsageError("--problem: unknown problem '" + args.problem + "'");
  config.problem = *problem;

  if (args.representation == "inclusion") {
    config.representation.kind = normnet::PowerKind::kInclusion;
  } else if (args.representation == "generalisation") {
    config.representation.kind = normnet::PowerKind::kGeneralisation;
  } else if (args.representation.rfind("custom:", 0) == 0) {
    config.representation.kind = normnet::PowerKind::kCustom;
    config.representation.custom = normnet::parse_representation(
        read_file(args.representation.substr(7)));
  } else {
    throw UsageError("--representation: expected inclusion, generalisation "
                     "or custom:<file>, got '" +
                     args.representation + "'");
  }

  auto mode = normnet::in_force_mode_from_name(args.in_force);
  if (!mode) throw UsageError("--in-force: unknown mode '" + args.in_force + "'");
  config.in_force_mode = *mode;

  if (config.problem == normnet::ProblemKind::kMnsp) {
    if (!args.budget.empty() || !args.weights.empty()) {
      std::cerr << "warning: mnsp takes no budget or weights; ignoring them\n";
    }
  } else {
    if (!args.budget.empty()) {
      config.budget = parse_rational_arg(args.budget, "--budget");
    }
    // Weights default to an even split over the problem's objectives.
    if (config.problem == normnet::ProblemKind::kMnsplb) {
      config.w_r = config.w_c = normnet::Rational(1, 2);
    } else {
      config.w_r = config.w_c = config.w_v = normnet::Rational(1, 3);
    }
    if (!args.weights.empty()) {
      std::vector<std::string> parts = split(args.weights, ',');
      if (parts.size() != 2 && parts.size() != 3) {
        throw UsageError("--weights: expected wr,wc or wr,wc,wv");
      }
      config.w_r = parse_rational_arg(parts[0], "--weights");
      config.w_c = parse_rational_arg(parts[1], "--weights");
      config.w_v = parts.size() == 3
                       ? parse_rational_arg(parts[2], "--weights")
                       : 0;
    }
  }
  config.value_order = doc.value_order;
  return config;
}

normnet::SolveOptions build_options(const SolveArgs& args) {
  normnet::SolveOptions options;
  options.enumerate_all_optima = args.all_optima;
  options.max_optima = args.max_optima;
  if (args.node_limit > 0) options.node_limit = args.node_limit;
  return options;
}

void print_human_report(const normnet::SolveReport& report) {
  std::cout << "status: " << normnet::solve_status_name(report.status) << "\n";
  if (report.objective) {
    std::cout << "objective: " << normnet::to_fraction_string(*report.objective)
              << " (" << normnet::to_decimal_string(*report.objective) << ")\n";
    std::cout << "optima (" << report.optima.size()
              << (report.truncated ? ", truncated" : "") << "):\n";
    for (const normnet::NormSystem& sys : report.optima) {
      std::cout << "  {";
      for (std::size_t i = 0; i < sys.member_ids.size(); ++i) {
        std::cout << (i > 0 ? ", " : "") << sys.member_ids[i];
      }
      std::cout << "}\n";
    }
  }
  std::cout << "nodes: " << report.stats.nodes << "\n";
}

int status_exit_code(normnet::SolveStatus status) {
  return status == normnet::SolveStatus::kOptimal ? kExitOk : kExitNoOptimum;
}

int run_validate(const std::string& file) {
  normnet::NormNetDocument doc = normnet::parse_norm_net(read_file(file));
  const normnet::NormNet& net = doc.net;
  std::cout << "valid norm net\n";
  std::cout << "norms: " << net.size() << "\n";
  std::cout << "generalisation pairs: " << net.relations().generalisation.size()
            << "\n";
  std::cout << "exclusivity pairs: " << net.relations().exclusivity.size()
            << "\n";
  std::cout << "substitutability pairs: "
            << net.relations().substitutability.size() << "\n";
  std::cout << "substitution closure pairs: "
            << net.substitution_closure_pairs().size() << "\n";
  std::cout << "roots:";
  for (const std::string& id : net.roots()) std::cout << " " << id;
  std::cout << "\n";
  std::cout << "in force:";
  if (net.in_force().empty()) std::cout << " (none)";
  for (const std::string& id : net.in_force()) std::cout << " " << id;
  std::cout << "\n";
  if (doc.value_order) {
    std::cout << "value order:";
    for (const std::string& id : doc.value_order->ordered_ids) {
      std::cout << " " << id;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_solve(const SolveArgs& args) {
  normnet::NormNetDocument doc = normnet::parse_norm_net(read_file(args.file));
  normnet::ProblemConfig config = build_config(args, doc);
  normnet::IlpModel model = normnet::encode_problem(doc.net, config);
  normnet::SolveReport report =
      normnet::solve_branch_and_bound(model, build_options(args));
  if (args.json) {
    std::cout << normnet::report_to_json(report);
  } else {
    print_human_report(report);
  }
  return status_exit_code(report.status);
}

int run_export_lp(const SolveArgs& args, const std::string& out_path) {
  normnet::NormNetDocument doc = normnet::parse_norm_net(read_file(args.file));
  normnet::ProblemConfig config = build_config(args, doc);
  normnet::IlpModel model = normnet::encode_problem(doc.net, config);
  write_file(out_path, normnet::export_lp(model));
  return kExitOk;
}

int run_gen(std::size_t n, std::size_t depth, std::size_t branching,
            double px, double ps, std::uint64_t seed,
            const std::string& out_path) {
  normnet::GeneratorParams params;
  params.n = n;
  params.depth = depth;
  params.branching = branching;
  params.p_x = px;
  params.p_s = ps;
  params.seed = seed;
  normnet::NormNetDocument doc = normnet::generate_random_net(params);
  write_file(out_path, normnet::serialize_norm_net(doc));
  return kExitOk;
}

int run_sweep(const SolveArgs& args, const std::string& budget_range,
              const std::string& weight_grid, const std::string& out_path) {
  if (budget_range.empty() == weight_grid.empty()) {
    throw UsageError(
        "sweep needs exactly one of --budget-range and --weight-grid");
  }
  normnet::NormNetDocument doc = normnet::parse_norm_net(read_file(args.file));
  normnet::ProblemConfig base = build_config(args, doc);
  normnet::SweepGrid grid;
  if (!budget_range.empty()) {
    std::vector<std::string> parts = split(budget_range, ':');
    if (parts.size() != 3) {
      throw UsageError("--budget-range: expected lo:hi:step");
    }
    grid.budget_range = normnet::SweepGrid::BudgetRange{
        parse_rational_arg(parts[0], "--budget-range"),
        parse_rational_arg(parts[1], "--budget-range"),
        parse_rational_arg(parts[2], "--budget-range")};
  } else {
    grid.weight_step = parse_rational_arg(weight_grid, "--weight-grid");
  }
  std::vector<normnet::SweepRow> rows =
      normnet::sweep(doc.net, base, grid, build_options(args));
  write_file(out_path, normnet::sweep_csv(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norm net validation, selection-problem solving and export"};
  app.require_subcommand(1);

  std::string validate_file;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and validate a norm net document");
  validate_cmd->add_option("file", validate_file, "norm net JSON document")
      ->required();

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve a norm selection problem exactly");
  add_solve_flags(solve_cmd, &solve_args);
  solve_cmd->add_flag("--json", solve_args.json,
                      "emit the solve report as JSON");

  SolveArgs export_args;
  std::string export_out;
  CLI::App* export_cmd = app.add_subcommand(
      "export-lp", "encode a problem and write it in LP text form");
  add_solve_flags(export_cmd, &export_args);
  export_cmd->add_option("-o,--output", export_out, "output .lp file")
      ->required();

  std::size_t gen_n = 0;
  std::size_t gen_depth = 1;
  std::size_t gen_branching = 2;
  double gen_px = 0.0;
  double gen_ps = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate a random norm net document");
  gen_cmd->add_option("--n", gen_n, "number of norms")->required();
  gen_cmd->add_option("--depth", gen_depth, "max generalisation depth");
  gen_cmd->add_option("--branching", gen_branching, "max children per parent");
  gen_cmd->add_option("--px", gen_px, "exclusivity probability");
  gen_cmd->add_option("--ps", gen_ps, "substitutability probability");
  gen_cmd->add_option("--seed", gen_seed, "64-bit seed");
  gen_cmd->add_option("-o,--output", gen_out, "output JSON file")->required();

  SolveArgs sweep_args;
  std::string sweep_budget_range;
  std::string sweep_weight_grid;
  std::string sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "solve over a budget range or weight grid, writing CSV");
  add_solve_flags(sweep_cmd, &sweep_args);
  sweep_cmd->add_option("--budget-range", sweep_budget_range, "lo:hi:step");
  sweep_cmd->add_option("--weight-grid", sweep_weight_grid, "step");
  sweep_cmd->add_option("-o,--output", sweep_out, "output CSV file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return run_validate(validate_file);
    if (*solve_cmd) return run_solve(solve_args);
    if (*export_cmd) return run_export_lp(export_args, export_out);
    if (*gen_cmd) {
      return run_gen(gen_n, gen_depth, gen_branching, gen_px, gen_ps, gen_seed,
                     gen_out);
    }
    if (*sweep_cmd) {
      return run_sweep(sweep_args, sweep_budget_range, sweep_weight_grid,
                       sweep_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const normnet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}
