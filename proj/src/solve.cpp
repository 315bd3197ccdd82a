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

#include "normnet/solve.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iterator>

namespace normnet {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Keeps the canonically smallest `cap` systems seen at the current best
// score; remembers whether anything was dropped.
class OptimaCollector {
 public:
  explicit OptimaCollector(std::size_t cap) : cap_(cap) {}

  void reset() {
    best_.clear();
    truncated_ = false;
  }

  void offer(NormSystem sys) {
    if (!best_.insert(std::move(sys)).second) return;
    if (best_.size() > cap_) {
      best_.erase(std::prev(best_.end()));
      truncated_ = true;
    }
  }

  bool truncated() const { return truncated_; }
  std::vector<NormSystem> take() const { return {best_.begin(), best_.end()}; }

 private:
  std::size_t cap_;
  std::set<NormSystem, CanonicalSystemLess> best_;
  bool truncated_ = false;
};

std::size_t effective_cap(const SolveOptions& options) {
  if (options.max_optima < 1) {
    fail(Errc::kInvalidParams, "max_optima must be at least 1");
  }
  return options.enumerate_all_optima ? options.max_optima : 1;
}

// All-integer branch-and-bound state. Objective and rows are scaled by the
// least common multiple of their denominators before the search starts.
class BranchAndBound {
 public:
  BranchAndBound(const IlpModel& model, const SolveOptions& options)
      : model_(model),
        collector_(effective_cap(options)),
        node_limit_(options.node_limit) {
    const std::size_t n = model.variables.size();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(model.variables[i], static_cast<int>(i)).second) {
        fail(Errc::kNonBinaryVariable,
             "variable '" + model.variables[i] + "' declared twice");
      }
    }

    std::vector<Rational> coeffs(n, Rational(0));
    for (const LinearTerm& term : model.objective) {
      auto it = index.find(term.var);
      if (it == index.end()) {
        fail(Errc::kNonBinaryVariable,
             "objective references undeclared variable '" + term.var + "'");
      }
      coeffs[it->second] += term.coeff;
    }
    obj_scale_ = common_denominator(coeffs);
    obj_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      obj_[i] = scaled_to_int(coeffs[i], obj_scale_);
    }

    rows_.reserve(model.constraints.size());
    occ_.assign(n, {});
    for (const RowConstraint& src : model.constraints) {
      Row row;
      row.equality = src.relation == RowRelation::kEqual;
      std::vector<Rational> parts;
      parts.reserve(src.terms.size() + 1);
      for (const LinearTerm& term : src.terms) parts.push_back(term.coeff);
      parts.push_back(src.rhs);
      BigInt scale = common_denominator(parts);
      std::map<int, BigInt> merged;
      for (const LinearTerm& term : src.terms) {
        auto it = index.find(term.var);
        if (it == index.end()) {
          fail(Errc::kNonBinaryVariable,
               "constraint '" + src.name + "' references undeclared variable '" +
                   term.var + "'");
        }
        merged[it->second] += scaled_to_int(term.coeff, scale);
      }
      row.rhs = scaled_to_int(src.rhs, scale);
      row.min_activity = 0;
      row.max_activity = 0;
      for (const auto& [var, coeff] : merged) {
        if (coeff == 0) continue;
        if (coeff < 0) row.min_activity += coeff;
        if (coeff > 0) row.max_activity += coeff;
        occ_[var].push_back(
            {static_cast<int>(rows_.size()), static_cast<int>(row.terms.size())});
        row.terms.push_back({var, coeff});
      }
      rows_.push_back(std::move(row));
    }

    value_.assign(n, -1);
    score_ = 0;
    pos_remaining_ = 0;
    for (const BigInt& c : obj_) {
      if (c > 0) pos_remaining_ += c;
    }

    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<int>(i);
    std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
      return boost::multiprecision::abs(obj_[a]) >
             boost::multiprecision::abs(obj_[b]);
    });

    is_norm_var_.assign(n, false);
    norm_of_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = model.variable_norm.find(model.variables[i]);
      if (it != model.variable_norm.end()) {
        is_norm_var_[i] = true;
        norm_of_[i] = it->second;
      }
    }
  }

  SolveReport run() {
    const auto start = Clock::now();
    SolveReport report;
    if (propagate_root()) {
      search(0);
    }
    report.stats.nodes = nodes_;
    report.stats.elapsed_seconds = seconds_since(start);
    if (aborted_) {
      report.status = SolveStatus::kNodeLimitReached;
      return report;
    }
    if (!have_best_) {
      report.status = SolveStatus::kInfeasible;
      return report;
    }
    report.status = SolveStatus::kOptimal;
    report.objective =
        Rational(best_, obj_scale_) + model_.objective_offset;
    report.optima = collector_.take();
    report.truncated = collector_.truncated();
    return report;
  }

 private:
  struct Row {
    std::vector<std::pair<int, BigInt>> terms;
    bool equality = false;
    BigInt rhs;
    // Activity bounds given the current partial assignment, with unassigned
    // variables at their per-variable extremes.
    BigInt min_activity;
    BigInt max_activity;
  };

  bool row_conflicted(const Row& row) const {
    if (row.min_activity > row.rhs) return true;
    if (row.equality && row.max_activity < row.rhs) return true;
    return false;
  }

  // Applies the assignment and updates bounds. Returns false on a direct
  // conflict in a touched row.
  bool assign(int var, int val) {
    value_[var] = val;
    trail_.push_back(var);
    if (obj_[var] > 0) pos_remaining_ -= obj_[var];
    if (val == 1) score_ += obj_[var];
    for (const auto& [r, t] : occ_[var]) {
      Row& row = rows_[r];
      const BigInt& coeff = row.terms[t].second;
      if (val == 1) {
        if (coeff > 0) row.min_activity += coeff;
        if (coeff < 0) row.max_activity += coeff;
      } else {
        if (coeff < 0) row.min_activity -= coeff;
        if (coeff > 0) row.max_activity -= coeff;
      }
      if (row_conflicted(row)) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int var = trail_.back();
      trail_.pop_back();
      int val = value_[var];
      value_[var] = -1;
      if (obj_[var] > 0) pos_remaining_ += obj_[var];
      if (val == 1) score_ -= obj_[var];
      for (const auto& [r, t] : occ_[var]) {
        Row& row = rows_[r];
        const BigInt& coeff = row.terms[t].second;
        if (val == 1) {
          if (coeff > 0) row.min_activity -= coeff;
          if (coeff < 0) row.max_activity -= coeff;
        } else {
          if (coeff < 0) row.min_activity += coeff;
          if (coeff > 0) row.max_activity += coeff;
        }
      }
    }
  }

  // Scans one row for variables whose remaining domain is now a singleton.
  // Returns false on conflict.
  bool force_from_row(int r) {
    Row& row = rows_[r];
    if (row_conflicted(row)) return false;
    for (const auto& [var, coeff] : row.terms) {
      if (value_[var] != -1) continue;
      if (coeff > 0) {
        if (row.min_activity + coeff > row.rhs) {
          if (!propagate(var, 0)) return false;
        } else if (row.equality && row.max_activity - coeff < row.rhs) {
          if (!propagate(var, 1)) return false;
        }
      } else if (coeff < 0) {
        if (row.min_activity - coeff > row.rhs) {
          if (!propagate(var, 1)) return false;
        } else if (row.equality && row.max_activity + coeff < row.rhs) {
          if (!propagate(var, 0)) return false;
        }
      }
    }
    return true;
  }

  bool propagate(int var, int val) {
    if (value_[var] != -1) return value_[var] == val;
    if (!assign(var, val)) return false;
    for (const auto& [r, t] : occ_[var]) {
      if (!force_from_row(r)) return false;
    }
    return true;
  }

  bool propagate_root() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!force_from_row(static_cast<int>(r))) return false;
    }
    return true;
  }

  void record_leaf() {
    if (!have_best_ || score_ > best_) {
      have_best_ = true;
      best_ = score_;
      collector_.reset();
    } else if (score_ < best_) {
      return;
    }
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      if (value_[i] == 1 && is_norm_var_[i]) ids.push_back(norm_of_[i]);
    }
    collector_.offer(make_system(std::move(ids)));
  }

  void search(std::size_t depth) {
    if (aborted_) return;
    ++nodes_;
    if (node_limit_ && nodes_ > *node_limit_) {
      aborted_ = true;
      return;
    }
    // Prune strictly dominated subtrees only, so exact ties are enumerated.
    if (have_best_ && score_ + pos_remaining_ < best_) return;

    int branch_var = -1;
    for (int v : order_) {
      if (value_[v] == -1) {
        branch_var = v;
        break;
      }
    }
    if (branch_var == -1) {
      record_leaf();
      return;
    }

    for (int val : {1, 0}) {
      std::size_t mark = trail_.size();
      if (propagate(branch_var, val)) {
        search(depth + 1);
      }
      undo_to(mark);
      if (aborted_) return;
    }
  }

  const IlpModel& model_;
  std::vector<BigInt> obj_;
  BigInt obj_scale_ = 1;
  std::vector<Row> rows_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
  std::vector<int> value_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<bool> is_norm_var_;
  std::vector<std::string> norm_of_;
  BigInt score_;
  BigInt pos_remaining_;
  bool have_best_ = false;
  BigInt best_;
  OptimaCollector collector_;
  std::uint64_t nodes_ = 0;
  std::optional<std::uint64_t> node_limit_;
  bool aborted_ = false;
};

}  // namespace

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kNodeLimitReached:
      return "node_limit_reached";
  }
  return "infeasible";
}

SolveReport solve_branch_and_bound(const IlpModel& model,
                                   const SolveOptions& options) {
  return BranchAndBound(model, options).run();
}

SolveReport brute_force_oracle(const NormNet& net, const ProblemConfig& config,
                               const SolveOptions& options) {
  const auto start = Clock::now();
  validate_problem_config(config);

  const bool ignore = config.in_force_mode == InForceMode::kIgnore;
  NormNet filtered;
  if (ignore) filtered = restrict_excluding(net, net.in_force());
  const NormNet& eff = ignore ? filtered : net;

  const std::size_t m = eff.size();
  if (m > 25) {
    fail(Errc::kTooLarge, "exhaustive enumeration capped at 25 norms, got " +
                              std::to_string(m));
  }

  std::vector<std::string> ids;
  ids.reserve(m);
  std::map<std::string, int> index;
  for (const auto& [id, n] : eff.norms()) {
    index.emplace(id, static_cast<int>(ids.size()));
    ids.push_back(id);
  }

  const bool budgeted = config.problem != ProblemKind::kMnsp;
  const bool valued =
      config.problem == ProblemKind::kVmnsplb && config.w_v > 0;

  // Per-norm objective coefficients straight from the problem formulas.
  std::vector<Rational> coeff(m, Rational(0));
  Rational y_coeff = 0;
  if (m > 0) {
    RepresentationAssignment rep =
        resolve_representation(eff, config.representation);
    const Rational r_max = max_representation(eff, rep);
    std::map<std::string, BigInt> u_n;
    Rational v_max = 0;
    if (valued) {
      u_n = norm_value_support(eff, value_utilities(*config.value_order));
      v_max = Rational(max_value_support(u_n));
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Norm& n = eff.norm(ids[i]);
      if (!budgeted) {
        coeff[i] = rep.power.at(n.id);
      } else {
        coeff[i] = config.w_r * rep.power.at(n.id) / r_max -
                   config.w_c * n.cost / *config.budget;
        if (valued) coeff[i] += config.w_v * Rational(u_n.at(n.id)) / v_max;
      }
    }
    if (budgeted) y_coeff = config.w_c;
  }

  std::vector<Rational> all = coeff;
  all.push_back(y_coeff);
  const BigInt scale = common_denominator(all);
  std::vector<BigInt> score_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    score_of[i] = scaled_to_int(coeff[i], scale);
  }
  const BigInt y_scaled = scaled_to_int(y_coeff, scale);

  std::vector<Rational> cost_parts;
  for (std::size_t i = 0; i < m; ++i) cost_parts.push_back(eff.norm(ids[i]).cost);
  if (budgeted) cost_parts.push_back(*config.budget);
  const BigInt cost_scale = common_denominator(cost_parts);
  std::vector<BigInt> cost_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    cost_of[i] = scaled_to_int(eff.norm(ids[i]).cost, cost_scale);
  }
  const BigInt budget_scaled =
      budgeted ? scaled_to_int(*config.budget, cost_scale) : BigInt(0);

  // Pairwise incompatibility masks implementing ilp_feasible: direct
  // generalisation, ancestry, exclusivity, substitution chains; plus
  // full-sibling-group masks for the >= 2 children rule.
  std::vector<std::uint64_t> bad(m, 0);
  auto forbid = [&bad, &index](const std::string& a, const std::string& b) {
    int ia = index.at(a);
    int ib = index.at(b);
    bad[ia] |= std::uint64_t(1) << ib;
    bad[ib] |= std::uint64_t(1) << ia;
  };
  for (const IdPair& p : eff.relations().generalisation) {
    forbid(p.first, p.second);
  }
  for (const auto& [id, ups] : eff.ancestor_map()) {
    for (const std::string& ancestor : ups) forbid(id, ancestor);
  }
  for (const IdPair& p : eff.relations().exclusivity) forbid(p.first, p.second);
  for (const IdPair& p : eff.substitution_closure_pairs()) {
    forbid(p.first, p.second);
  }
  std::vector<std::uint64_t> sibling_groups;
  for (const auto& [id, n] : eff.norms()) {
    const std::set<std::string>& group = eff.children(id);
    if (group.size() < 2) continue;
    std::uint64_t mask = 0;
    for (const std::string& child : group) {
      mask |= std::uint64_t(1) << index.at(child);
    }
    sibling_groups.push_back(mask);
  }
  std::uint64_t pin_mask = 0;
  if (config.in_force_mode == InForceMode::kPreserve) {
    for (const std::string& id : eff.in_force()) {
      pin_mask |= std::uint64_t(1) << index.at(id);
    }
  }

  OptimaCollector collector(effective_cap(options));
  bool have_best = false;
  BigInt best;

  auto evaluate = [&](std::uint64_t mask, const BigInt& score,
                      const BigInt& cost) {
    if ((mask & pin_mask) != pin_mask) return;
    if (budgeted && cost > budget_scaled) return;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      if ((bad[i] & mask) != 0) return;
    }
    for (std::uint64_t group : sibling_groups) {
      if ((mask & group) == group) return;
    }
    BigInt total = score;
    if (budgeted && mask != 0) total += y_scaled;
    if (have_best && total < best) return;
    if (!have_best || total > best) {
      have_best = true;
      best = total;
      collector.reset();
    }
    std::vector<std::string> members;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      members.push_back(ids[std::countr_zero(rest)]);
    }
    collector.offer(make_system(std::move(members)));
  };

  // Gray-code walk: one integer add/subtract per subset.
  std::uint64_t mask = 0;
  BigInt score = 0;
  BigInt cost = 0;
  evaluate(mask, score, cost);
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t k = 1; k < total; ++k) {
    int flip = std::countr_zero(k);
    std::uint64_t bit = std::uint64_t(1) << flip;
    if (mask & bit) {
      mask &= ~bit;
      score -= score_of[flip];
      cost -= cost_of[flip];
    } else {
      mask |= bit;
      score += score_of[flip];
      cost += cost_of[flip];
    }
    evaluate(mask, score, cost);
  }

  SolveReport report;
  report.stats.nodes = total;
  report.stats.elapsed_seconds = seconds_since(start);
  if (!have_best) {
    report.status = SolveStatus::kInfeasible;
    return report;
  }
  report.status = SolveStatus::kOptimal;
  report.objective = Rational(best, scale);
  report.optima = collector.take();
  report.truncated = collector.truncated();
  return report;
}

}  // namespace normnet
