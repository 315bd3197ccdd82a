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

#ifndef NORMNET_ILP_HPP_
#define NORMNET_ILP_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normnet/norm_net.hpp"
#include "normnet/rational.hpp"
#include "normnet/representation.hpp"
#include "normnet/values.hpp"

namespace normnet {

// The three selection problems:
//   mnsp     maximize summed representation power subject to the relational
//            constraints alone;
//   mnsplb   weighted blend of normalized representation power and cost under
//            a budget, with an indicator rewarding non-empty selections;
//   vmnsplb  mnsplb plus a normalized value-support term.
enum class ProblemKind { kMnsp, kMnsplb, kVmnsplb };

const char* problem_name(ProblemKind kind);
std::optional<ProblemKind> problem_from_name(const std::string& name);

// What to do with a net's in-force norms when building a model:
//   ignore    drop them (and their relation pairs) from the model entirely;
//   preserve  keep them and pin their variables to 1;
//   flexible  keep them as ordinary candidates.
enum class InForceMode { kIgnore, kPreserve, kFlexible };

const char* in_force_mode_name(InForceMode mode);
std::optional<InForceMode> in_force_mode_from_name(const std::string& name);

struct RepresentationChoice {
  PowerKind kind = PowerKind::kInclusion;
  // Required iff kind == kCustom.
  std::optional<RepresentationAssignment> custom;
};

struct ProblemConfig {
  ProblemKind problem = ProblemKind::kMnsp;
  RepresentationChoice representation;
  std::optional<Rational> budget;  // required and positive unless mnsp
  Rational w_r = 0;
  Rational w_c = 0;
  Rational w_v = 0;
  InForceMode in_force_mode = InForceMode::kFlexible;
  // Required when w_v > 0; each norm must then support at least one value.
  std::optional<ValueOrder> value_order;
};

// Net-independent parameter checks: budget presence/positivity, weight
// domains and sums (w_r + w_c = 1 for mnsplb, w_r + w_c + w_v = 1 for
// vmnsplb), custom assignment presence, value order presence when w_v > 0.
void validate_problem_config(const ProblemConfig& config);

// Resolves the configured representation over a concrete net (computing the
// built-in kinds, or validating a custom assignment).
RepresentationAssignment resolve_representation(const NormNet& net,
                                                const RepresentationChoice& choice);

enum class RowRelation { kLessEq, kEqual };

struct LinearTerm {
  std::string var;
  Rational coeff;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct RowConstraint {
  std::string name;
  std::vector<LinearTerm> terms;  // sorted by variable name
  RowRelation relation = RowRelation::kLessEq;
  Rational rhs = 0;

  friend bool operator==(const RowConstraint&, const RowConstraint&) = default;
};

// Solver-independent 0/1 linear program. One binary variable per norm
// (x_<id>), plus at most one indicator y on budgeted problems. The objective
// is a maximization and keeps zero coefficients so the variable set is
// self-describing.
struct IlpModel {
  std::vector<std::string> variables;  // x_* sorted by norm id, then y
  std::vector<LinearTerm> objective;
  Rational objective_offset = 0;
  std::vector<RowConstraint> constraints;
  std::map<std::string, std::string> variable_norm;  // x_<id> -> id
  std::optional<std::string> indicator;
  std::optional<Rational> big_m;

  friend bool operator==(const IlpModel&, const IlpModel&) = default;
};

struct EncodeOptions {
  // Drop constraints that canonicalize to an already emitted row (e.g. an
  // ancestor pair that repeats a direct parent/child pair). Disabling this is
  // only useful for testing that deduplication never changes the feasible set.
  bool deduplicate = true;
};

// Builds the 0/1 program for the configured problem:
//   - pairwise rows g2_<p>_<c> for direct generalisation pairs;
//   - sibling rows g3_<p>: sum of children <= |children|-1 (>= 2 children);
//   - ancestor rows g4_<n>_<a>, deduplicated against g2;
//   - exclusivity rows x_<a>_<b> and substitution-closure rows s_<a>_<b>;
//   - for budgeted problems: the budget row, indicator rows ind_lo / ind_hi
//     with M = |N|+1, and pin rows pin_<n> in preserve mode.
IlpModel encode_problem(const NormNet& net, const ProblemConfig& config,
                        const EncodeOptions& options = {});

// Renders the model in the line-oriented interchange grammar:
//   MAXIMIZE / SUBJECT TO / BINARY / END sections, " obj:" objective line,
//   named constraint rows sorted by name, decimals with 12 significant
//   digits, coefficient omitted in rows when exactly 1. Deterministic.
std::string export_lp(const IlpModel& model);

}  // namespace normnet

#endif  // NORMNET_ILP_HPP_
