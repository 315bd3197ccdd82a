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

#include "normnet/ilp.hpp"

#include <algorithm>
#include <sstream>

namespace normnet {
namespace {

std::string var_name(const std::string& norm_id) { return "x_" + norm_id; }

bool in_unit_interval(const Rational& w) { return w >= 0 && w <= 1; }

// Canonical row key used for duplicate detection: relation, terms sorted by
// variable, everything scaled by the first coefficient's absolute value.
std::string canonical_row_key(const RowConstraint& row) {
  std::vector<LinearTerm> terms = row.terms;
  std::sort(terms.begin(), terms.end(),
            [](const LinearTerm& a, const LinearTerm& b) {
              return a.var < b.var;
            });
  Rational scale = 1;
  for (const LinearTerm& t : terms) {
    if (t.coeff != 0) {
      scale = boost::multiprecision::abs(t.coeff);
      break;
    }
  }
  std::ostringstream key;
  key << (row.relation == RowRelation::kEqual ? "=" : "<");
  for (const LinearTerm& t : terms) {
    if (t.coeff == 0) continue;
    key << "|" << t.var << "*" << to_fraction_string(t.coeff / scale);
  }
  key << "|rhs=" << to_fraction_string(row.rhs / scale);
  return key.str();
}

class RowBuilder {
 public:
  explicit RowBuilder(bool deduplicate) : deduplicate_(deduplicate) {}

  void add(RowConstraint row) {
    std::sort(row.terms.begin(), row.terms.end(),
              [](const LinearTerm& a, const LinearTerm& b) {
                return a.var < b.var;
              });
    if (deduplicate_ && !seen_.insert(canonical_row_key(row)).second) return;
    rows_.push_back(std::move(row));
  }

  std::vector<RowConstraint> take() { return std::move(rows_); }

 private:
  bool deduplicate_;
  std::set<std::string> seen_;
  std::vector<RowConstraint> rows_;
};

}  // namespace

const char* problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMnsp:
      return "mnsp";
    case ProblemKind::kMnsplb:
      return "mnsplb";
    case ProblemKind::kVmnsplb:
      return "vmnsplb";
  }
  return "mnsp";
}

std::optional<ProblemKind> problem_from_name(const std::string& name) {
  if (name == "mnsp") return ProblemKind::kMnsp;
  if (name == "mnsplb") return ProblemKind::kMnsplb;
  if (name == "vmnsplb") return ProblemKind::kVmnsplb;
  return std::nullopt;
}

const char* in_force_mode_name(InForceMode mode) {
  switch (mode) {
    case InForceMode::kIgnore:
      return "ignore";
    case InForceMode::kPreserve:
      return "preserve";
    case InForceMode::kFlexible:
      return "flexible";
  }
  return "flexible";
}

std::optional<InForceMode> in_force_mode_from_name(const std::string& name) {
  if (name == "ignore") return InForceMode::kIgnore;
  if (name == "preserve") return InForceMode::kPreserve;
  if (name == "flexible") return InForceMode::kFlexible;
  return std::nullopt;
}

void validate_problem_config(const ProblemConfig& config) {
  if (config.representation.kind == PowerKind::kCustom &&
      !config.representation.custom.has_value()) {
    fail(Errc::kMissingRepresentation,
         "custom representation selected but no assignment supplied");
  }
  if (config.problem == ProblemKind::kMnsp) return;

  if (!config.budget.has_value() || *config.budget <= 0) {
    fail(Errc::kConfigInvariantViolation,
         std::string(problem_name(config.problem)) +
             " requires a positive budget");
  }
  if (!in_unit_interval(config.w_r) || !in_unit_interval(config.w_c) ||
      !in_unit_interval(config.w_v)) {
    fail(Errc::kConfigInvariantViolation, "weights must lie in [0, 1]");
  }
  if (config.problem == ProblemKind::kMnsplb) {
    if (config.w_v != 0) {
      fail(Errc::kConfigInvariantViolation, "mnsplb does not take w_v");
    }
    if (config.w_r + config.w_c != 1) {
      fail(Errc::kConfigInvariantViolation,
           "mnsplb requires w_r + w_c = 1, got " +
               to_fraction_string(config.w_r + config.w_c));
    }
  } else {
    if (config.w_r + config.w_c + config.w_v != 1) {
      fail(Errc::kConfigInvariantViolation,
           "vmnsplb requires w_r + w_c + w_v = 1, got " +
               to_fraction_string(config.w_r + config.w_c + config.w_v));
    }
    if (config.w_v > 0 && !config.value_order.has_value()) {
      fail(Errc::kConfigInvariantViolation,
           "vmnsplb with w_v > 0 requires a value order");
    }
  }
}

RepresentationAssignment resolve_representation(
    const NormNet& net, const RepresentationChoice& choice) {
  switch (choice.kind) {
    case PowerKind::kInclusion:
      return inclusion_power(net);
    case PowerKind::kGeneralisation:
      return generalisation_power(net);
    case PowerKind::kCustom:
      break;
  }
  if (!choice.custom.has_value()) {
    fail(Errc::kMissingRepresentation,
         "custom representation selected but no assignment supplied");
  }
  try {
    validate_representation(net, *choice.custom);
  } catch (const Error& e) {
    if (e.code() == Errc::kMissingEntry) {
      fail(Errc::kMissingRepresentation, e.what());
    }
    throw;
  }
  return *choice.custom;
}

IlpModel encode_problem(const NormNet& net, const ProblemConfig& config,
                        const EncodeOptions& options) {
  validate_problem_config(config);

  const bool ignore = config.in_force_mode == InForceMode::kIgnore;
  NormNet filtered;
  if (ignore) filtered = restrict_excluding(net, net.in_force());
  const NormNet& eff = ignore ? filtered : net;

  if (eff.size() == 0) {
    fail(Errc::kZeroRMax, "cannot encode a problem over an empty net");
  }

  RepresentationAssignment rep =
      resolve_representation(eff, config.representation);
  const Rational r_max = max_representation(eff, rep);
  if (r_max == 0) {
    fail(Errc::kZeroRMax, "total root representation power is zero");
  }

  const bool budgeted = config.problem != ProblemKind::kMnsp;
  const bool valued =
      config.problem == ProblemKind::kVmnsplb && config.w_v > 0;

  std::map<std::string, BigInt> u_n;
  Rational v_max = 0;
  if (valued) {
    UtilityAssignment u = value_utilities(*config.value_order);
    u_n = norm_value_support(eff, u);
    v_max = Rational(max_value_support(u_n));
    if (v_max == 0) {
      fail(Errc::kZeroVMax, "total value support is zero");
    }
  }

  IlpModel model;
  for (const auto& [id, n] : eff.norms()) {
    model.variables.push_back(var_name(id));
    model.variable_norm.emplace(var_name(id), id);
  }
  if (budgeted) {
    model.variables.push_back("y");
    model.indicator = "y";
    model.big_m = Rational(static_cast<unsigned>(eff.size()) + 1);
  }

  // Objective.
  for (const auto& [id, n] : eff.norms()) {
    Rational coeff;
    if (!budgeted) {
      coeff = rep.power.at(id);
    } else {
      coeff = config.w_r * rep.power.at(id) / r_max -
              config.w_c * n.cost / *config.budget;
      if (valued) coeff += config.w_v * Rational(u_n.at(id)) / v_max;
    }
    model.objective.push_back({var_name(id), coeff});
  }
  if (budgeted) model.objective.push_back({"y", config.w_c});

  // Constraints, family by family. Duplicates keep their first-emitted name.
  RowBuilder rows(options.deduplicate);
  for (const IdPair& p : eff.relations().generalisation) {
    rows.add({"g2_" + p.first + "_" + p.second,
              {{var_name(p.first), 1}, {var_name(p.second), 1}},
              RowRelation::kLessEq,
              1});
  }
  for (const auto& [id, n] : eff.norms()) {
    const std::set<std::string>& group = eff.children(id);
    if (group.size() < 2) continue;
    RowConstraint row;
    row.name = "g3_" + id;
    for (const std::string& child : group) {
      row.terms.push_back({var_name(child), 1});
    }
    row.relation = RowRelation::kLessEq;
    row.rhs = Rational(static_cast<unsigned>(group.size()) - 1);
    rows.add(std::move(row));
  }
  for (const auto& [id, ups] : eff.ancestor_map()) {
    for (const std::string& ancestor : ups) {
      rows.add({"g4_" + id + "_" + ancestor,
                {{var_name(id), 1}, {var_name(ancestor), 1}},
                RowRelation::kLessEq,
                1});
    }
  }
  for (const IdPair& p : eff.relations().exclusivity) {
    rows.add({"x_" + p.first + "_" + p.second,
              {{var_name(p.first), 1}, {var_name(p.second), 1}},
              RowRelation::kLessEq,
              1});
  }
  for (const IdPair& p : eff.substitution_closure_pairs()) {
    rows.add({"s_" + p.first + "_" + p.second,
              {{var_name(p.first), 1}, {var_name(p.second), 1}},
              RowRelation::kLessEq,
              1});
  }

  if (budgeted) {
    RowConstraint budget;
    budget.name = "budget";
    for (const auto& [id, n] : eff.norms()) {
      if (n.cost != 0) budget.terms.push_back({var_name(id), n.cost});
    }
    budget.relation = RowRelation::kLessEq;
    budget.rhs = *config.budget;
    if (!budget.terms.empty()) rows.add(std::move(budget));

    RowConstraint ind_lo;  // y <= sum of x
    ind_lo.name = "ind_lo";
    ind_lo.terms.push_back({"y", 1});
    for (const auto& [id, n] : eff.norms()) {
      ind_lo.terms.push_back({var_name(id), -1});
    }
    ind_lo.relation = RowRelation::kLessEq;
    ind_lo.rhs = 0;
    rows.add(std::move(ind_lo));

    RowConstraint ind_hi;  // sum of x <= M * y
    ind_hi.name = "ind_hi";
    for (const auto& [id, n] : eff.norms()) {
      ind_hi.terms.push_back({var_name(id), 1});
    }
    ind_hi.terms.push_back({"y", -*model.big_m});
    ind_hi.relation = RowRelation::kLessEq;
    ind_hi.rhs = 0;
    rows.add(std::move(ind_hi));
  }

  if (config.in_force_mode == InForceMode::kPreserve) {
    for (const std::string& id : eff.in_force()) {
      rows.add({"pin_" + id, {{var_name(id), 1}}, RowRelation::kEqual, 1});
    }
  }

  model.constraints = rows.take();
  return model;
}

namespace {

// Objective terms always carry an explicit coefficient; constraint terms omit
// a coefficient of exactly 1.
std::string render_term(const LinearTerm& term, bool force_coefficient) {
  if (!force_coefficient && term.coeff == 1) return term.var;
  return to_decimal_string(term.coeff) + " " + term.var;
}

}  // namespace

std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  out << "MAXIMIZE\n obj:";
  bool first = true;
  for (const LinearTerm& term : model.objective) {
    out << (first ? " " : " + ") << render_term(term, true);
    first = false;
  }
  if (model.objective_offset != 0) {
    out << (first ? " " : " + ") << to_decimal_string(model.objective_offset)
        << " one";
    first = false;
  }
  out << "\n";

  if (!model.constraints.empty()) {
    std::vector<const RowConstraint*> sorted;
    sorted.reserve(model.constraints.size());
    for (const RowConstraint& row : model.constraints) sorted.push_back(&row);
    std::sort(sorted.begin(), sorted.end(),
              [](const RowConstraint* a, const RowConstraint* b) {
                return a->name < b->name;
              });
    out << "SUBJECT TO\n";
    for (const RowConstraint* row : sorted) {
      out << " " << row->name << ":";
      bool first_term = true;
      for (const LinearTerm& term : row->terms) {
        out << (first_term ? " " : " + ") << render_term(term, false);
        first_term = false;
      }
      out << (row->relation == RowRelation::kEqual ? " = " : " <= ")
          << to_decimal_string(row->rhs) << "\n";
    }
  }

  out << "BINARY\n";
  for (const std::string& var : model.variables) out << " " << var;
  out << "\nEND\n";
  return out.str();
}

}  // namespace normnet
