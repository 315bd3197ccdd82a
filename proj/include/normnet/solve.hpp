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

#ifndef NORMNET_SOLVE_HPP_
#define NORMNET_SOLVE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "normnet/ilp.hpp"
#include "normnet/norm_net.hpp"

namespace normnet {

struct SolveOptions {
  // When false only the canonically first optimum is reported; equivalent to
  // max_optima = 1. Ties are still detected, so `truncated` stays accurate.
  bool enumerate_all_optima = true;
  std::size_t max_optima = 64;
  std::optional<std::uint64_t> node_limit;
};

enum class SolveStatus { kOptimal, kInfeasible, kNodeLimitReached };

const char* solve_status_name(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Exact result. All reported optima attain the same exact rational objective;
// the list is duplicate-free and ordered by cardinality, then lexicographically
// by sorted norm ids, so equal inputs always produce equal reports.
struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Rational> objective;  // present iff optimal
  std::vector<NormSystem> optima;
  bool truncated = false;  // more optima exist than max_optima
  SolveStats stats;
};

// Depth-first branch and bound over the binary variables with bound-based row
// propagation. Branches on the largest absolute objective coefficient, value
// 1 first; prunes only strictly dominated subtrees so exact ties survive.
// Arithmetic is integer throughout (denominators cleared up front).
SolveReport solve_branch_and_bound(const IlpModel& model,
                                   const SolveOptions& options = {});

// Independent reference: enumerates every subset of the (mode-adjusted) net,
// filters with ilp_feasible, the budget, and preserve pins, and scores with
// the problem's objective formula directly. Capped at 25 norms.
SolveReport brute_force_oracle(const NormNet& net, const ProblemConfig& config,
                               const SolveOptions& options = {});

}  // namespace normnet

#endif  // NORMNET_SOLVE_HPP_
