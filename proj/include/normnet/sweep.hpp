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

#ifndef NORMNET_SWEEP_HPP_
#define NORMNET_SWEEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "normnet/ilp.hpp"
#include "normnet/solve.hpp"

namespace normnet {

// Either a budget walk lo, lo+step, ... capped at hi, or a weight grid with
// the given step: w_r = 0, step, ..., 1 for two-weight problems (w_c is the
// remainder), and all (w_r, w_c) with w_r + w_c <= 1 for three-weight
// problems (w_v is the remainder).
struct SweepGrid {
  struct BudgetRange {
    Rational lo;
    Rational hi;
    Rational step;
  };
  std::optional<BudgetRange> budget_range;
  std::optional<Rational> weight_step;
};

struct SweepRow {
  ProblemKind problem;
  PowerKind representation;
  std::optional<Rational> budget;
  Rational w_r;
  Rational w_c;
  Rational w_v;
  // "optimal", "infeasible", "node_limit_reached", or "error: <Code>: ...".
  std::string status;
  std::optional<Rational> objective;
  std::vector<NormSystem> optima;
  std::uint64_t nodes = 0;
};

// One row per grid point, each solved independently from the base config in
// grid order. A failing point records its error in `status` and the sweep
// continues.
std::vector<SweepRow> sweep(const NormNet& net, const ProblemConfig& base,
                            const SweepGrid& grid,
                            const SolveOptions& options = {});

// Fixed columns:
//   problem,representation,budget,w_r,w_c,w_v,status,objective_rational,
//   objective_decimal,optima,nodes
// Optima render as "{a b}|{c}" in canonical order; numeric fields use
// 12-significant-digit decimals, objective also as an exact fraction.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace normnet

#endif  // NORMNET_SWEEP_HPP_
