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

#include "normnet/sweep.hpp"

#include <sstream>

namespace normnet {
namespace {

std::vector<ProblemConfig> expand_grid(const ProblemConfig& base,
                                       const SweepGrid& grid) {
  if (grid.budget_range.has_value() == grid.weight_step.has_value()) {
    fail(Errc::kInvalidParams,
         "exactly one of budget range and weight step must be given");
  }
  std::vector<ProblemConfig> points;

  if (grid.budget_range) {
    const auto& range = *grid.budget_range;
    if (range.step <= 0) {
      fail(Errc::kInvalidParams, "budget step must be positive");
    }
    if (range.lo > range.hi) {
      fail(Errc::kInvalidParams, "empty budget range");
    }
    for (Rational b = range.lo; b <= range.hi; b += range.step) {
      ProblemConfig config = base;
      config.budget = b;
      points.push_back(std::move(config));
    }
    return points;
  }

  const Rational step = *grid.weight_step;
  if (step <= 0 || step > 1) {
    fail(Errc::kInvalidParams, "weight step must lie in (0, 1]");
  }
  if (base.problem == ProblemKind::kMnsp) {
    fail(Errc::kInvalidParams, "weight grids require a budgeted problem");
  }
  for (Rational wr = 0; wr <= 1; wr += step) {
    if (base.problem == ProblemKind::kMnsplb) {
      ProblemConfig config = base;
      config.w_r = wr;
      config.w_c = 1 - wr;
      config.w_v = 0;
      points.push_back(std::move(config));
    } else {
      for (Rational wc = 0; wc <= 1 - wr; wc += step) {
        ProblemConfig config = base;
        config.w_r = wr;
        config.w_c = wc;
        config.w_v = 1 - wr - wc;
        points.push_back(std::move(config));
      }
    }
  }
  return points;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::vector<SweepRow> sweep(const NormNet& net, const ProblemConfig& base,
                            const SweepGrid& grid,
                            const SolveOptions& options) {
  std::vector<SweepRow> rows;
  for (const ProblemConfig& config : expand_grid(base, grid)) {
    SweepRow row;
    row.problem = config.problem;
    row.representation = config.representation.kind;
    row.budget = config.budget;
    row.w_r = config.w_r;
    row.w_c = config.w_c;
    row.w_v = config.w_v;
    try {
      SolveReport report =
          solve_branch_and_bound(encode_problem(net, config), options);
      row.status = solve_status_name(report.status);
      row.objective = report.objective;
      row.optima = report.optima;
      row.nodes = report.stats.nodes;
    } catch (const Error& e) {
      row.status = std::string("error: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "problem,representation,budget,w_r,w_c,w_v,status,"
         "objective_rational,objective_decimal,optima,nodes\n";
  for (const SweepRow& row : rows) {
    out << problem_name(row.problem) << ","
        << power_kind_name(row.representation) << ","
        << (row.budget ? to_decimal_string(*row.budget) : "") << ","
        << to_decimal_string(row.w_r) << "," << to_decimal_string(row.w_c)
        << "," << to_decimal_string(row.w_v) << "," << csv_field(row.status)
        << ","
        << (row.objective ? to_fraction_string(*row.objective) : "") << ","
        << (row.objective ? to_decimal_string(*row.objective) : "") << ",";
    std::string optima;
    for (const NormSystem& sys : row.optima) {
      if (!optima.empty()) optima += "|";
      optima += "{";
      for (std::size_t i = 0; i < sys.member_ids.size(); ++i) {
        if (i > 0) optima += " ";
        optima += sys.member_ids[i];
      }
      optima += "}";
    }
    out << csv_field(optima) << "," << row.nodes << "\n";
  }
  return out.str();
}

}  // namespace normnet
