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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "normnet/ilp.hpp"
#include "support/fixtures.hpp"
#include "support/lp_parser.hpp"
#include "support/model_eval.hpp"

namespace normnet {
namespace {

using testing::assignment_for;
using testing::make_airport_net;
using testing::make_chain_net;
using testing::make_extended_net;
using testing::make_norm;
using testing::parse_lp;
using testing::satisfies;

ProblemConfig budget_config(ProblemKind problem, PowerKind kind,
                            Rational budget, Rational w_r, Rational w_c,
                            Rational w_v = 0) {
  ProblemConfig config;
  config.problem = problem;
  config.representation.kind = kind;
  config.budget = std::move(budget);
  config.w_r = std::move(w_r);
  config.w_c = std::move(w_c);
  config.w_v = std::move(w_v);
  config.value_order = testing::airport_value_order();
  return config;
}

Errc config_error(const ProblemConfig& config) {
  try {
    validate_problem_config(config);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  throw;
}

const RowConstraint& row(const IlpModel& model, const std::string& name) {
  for (const RowConstraint& r : model.constraints) {
    if (r.name == name) return r;
  }
  FAIL(("no constraint named " + name).c_str());
  throw std::logic_error("unreachable");
}

bool has_row(const IlpModel& model, const std::string& name) {
  return std::any_of(model.constraints.begin(), model.constraints.end(),
                     [&](const RowConstraint& r) { return r.name == name; });
}

Rational objective_coeff(const IlpModel& model, const std::string& var) {
  for (const LinearTerm& term : model.objective) {
    if (term.var == var) return term.coeff;
  }
  FAIL(("no objective term for " + var).c_str());
  throw std::logic_error("unreachable");
}

TEST_CASE("config validation enforces the weight and budget contracts") {
  ProblemConfig mnsp;  // defaults: mnsp, inclusion, no budget
  validate_problem_config(mnsp);

  CHECK(config_error(budget_config(ProblemKind::kMnsplb, PowerKind::kInclusion,
                                   0, Rational(1, 2), Rational(1, 2))) ==
        Errc::kConfigInvariantViolation);
  CHECK(config_error(budget_config(ProblemKind::kMnsplb, PowerKind::kInclusion,
                                   -3, Rational(1, 2), Rational(1, 2))) ==
        Errc::kConfigInvariantViolation);

  ProblemConfig no_budget;
  no_budget.problem = ProblemKind::kMnsplb;
  no_budget.w_r = no_budget.w_c = Rational(1, 2);
  CHECK(config_error(no_budget) == Errc::kConfigInvariantViolation);

  CHECK(config_error(budget_config(ProblemKind::kMnsplb, PowerKind::kInclusion,
                                   5, Rational(2, 3), Rational(2, 3))) ==
        Errc::kConfigInvariantViolation);
  CHECK(config_error(budget_config(ProblemKind::kMnsplb, PowerKind::kInclusion,
                                   5, Rational(3, 2), Rational(-1, 2))) ==
        Errc::kConfigInvariantViolation);
  // mnsplb is the two-weight problem; a value weight is a contradiction.
  CHECK(config_error(budget_config(ProblemKind::kMnsplb, PowerKind::kInclusion,
                                   5, Rational(1, 2), Rational(1, 4),
                                   Rational(1, 4))) ==
        Errc::kConfigInvariantViolation);

  validate_problem_config(budget_config(ProblemKind::kMnsplb,
                                        PowerKind::kInclusion, 5,
                                        Rational(1, 2), Rational(1, 2)));
  validate_problem_config(budget_config(ProblemKind::kVmnsplb,
                                        PowerKind::kInclusion, 5,
                                        Rational(1, 3), Rational(1, 3),
                                        Rational(1, 3)));

  ProblemConfig no_order = budget_config(ProblemKind::kVmnsplb,
                                         PowerKind::kInclusion, 5, 0, 0, 1);
  no_order.value_order.reset();
  CHECK(config_error(no_order) == Errc::kConfigInvariantViolation);
  // With a zero value weight the order is not needed.
  ProblemConfig zero_wv = budget_config(ProblemKind::kVmnsplb,
                                        PowerKind::kInclusion, 5,
                                        Rational(1, 2), Rational(1, 2), 0);
  zero_wv.value_order.reset();
  validate_problem_config(zero_wv);

  ProblemConfig custom;
  custom.representation.kind = PowerKind::kCustom;
  CHECK(config_error(custom) == Errc::kMissingRepresentation);
}

TEST_CASE("resolving representations matches the direct computations") {
  NormNet net = make_airport_net();
  RepresentationChoice inclusion{PowerKind::kInclusion, std::nullopt};
  CHECK(resolve_representation(net, inclusion) == inclusion_power(net));

  RepresentationChoice generalisation{PowerKind::kGeneralisation,
                                      std::nullopt};
  CHECK(resolve_representation(net, generalisation) ==
        generalisation_power(net));

  RepresentationChoice custom{PowerKind::kCustom, inclusion_power(net)};
  custom.custom->kind = PowerKind::kCustom;
  CHECK(resolve_representation(net, custom).power ==
        inclusion_power(net).power);

  RepresentationChoice incomplete = custom;
  incomplete.custom->power.erase("n2");
  try {
    resolve_representation(net, incomplete);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kMissingRepresentation);
  }
}

TEST_CASE("the pure representation problem has no budget machinery") {
  NormNet net = make_airport_net();
  IlpModel model = encode_problem(net, ProblemConfig{});

  CHECK(model.variables ==
        std::vector<std::string>{"x_n1", "x_n2", "x_n3", "x_n4", "x_n5"});
  CHECK_FALSE(model.indicator.has_value());
  CHECK_FALSE(model.big_m.has_value());
  CHECK(model.objective_offset == 0);

  // Objective = raw inclusion power.
  CHECK(objective_coeff(model, "x_n1") == 1);
  CHECK(objective_coeff(model, "x_n3") == 3);

  std::vector<std::string> names;
  for (const RowConstraint& r : model.constraints) names.push_back(r.name);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"g2_n3_n4", "g2_n3_n5", "g3_n3",
                                          "s_n2_n3", "x_n1_n2", "x_n1_n3"});

  const RowConstraint& sibling = row(model, "g3_n3");
  CHECK(sibling.terms ==
        std::vector<LinearTerm>{{"x_n4", 1}, {"x_n5", 1}});
  CHECK(sibling.rhs == 1);
  CHECK(sibling.relation == RowRelation::kLessEq);
  CHECK(model.variable_norm.at("x_n4") == "n4");
}

TEST_CASE("budgeted objectives carry the normalized blended coefficients") {
  NormNet net = make_airport_net();
  IlpModel model = encode_problem(
      net, budget_config(ProblemKind::kMnsplb, PowerKind::kGeneralisation, 5,
                         Rational(1, 2), Rational(1, 2)));

  CHECK(model.variables == std::vector<std::string>{"x_n1", "x_n2", "x_n3",
                                                    "x_n4", "x_n5", "y"});
  CHECK(model.indicator == "y");
  CHECK(model.big_m == 6);

  // (w_r / R_max) r_i - (w_c / b) c_i with R_max = 3; cost term for y is w_c.
  CHECK(objective_coeff(model, "x_n1") == Rational(1, 6));
  CHECK(objective_coeff(model, "x_n2") == Rational(-1, 30));
  CHECK(objective_coeff(model, "x_n3") == Rational(-1, 3));
  CHECK(objective_coeff(model, "x_n4") == Rational(-7, 60));
  CHECK(objective_coeff(model, "y") == Rational(1, 2));

  // Zero-cost norms stay out of the budget row; free selections can't spend.
  const RowConstraint& budget = row(model, "budget");
  CHECK(budget.terms == std::vector<LinearTerm>{{"x_n2", 2},
                                                {"x_n3", 5},
                                                {"x_n4", 2},
                                                {"x_n5", 2}});
  CHECK(budget.rhs == 5);

  const RowConstraint& ind_hi = row(model, "ind_hi");
  CHECK(ind_hi.terms.back() == LinearTerm{"y", -6});
  const RowConstraint& ind_lo = row(model, "ind_lo");
  CHECK(ind_lo.terms.back() == LinearTerm{"y", 1});
  CHECK(ind_lo.rhs == 0);
}

TEST_CASE("the value-weighted problem adds normalized support terms") {
  NormNet net = make_airport_net();
  IlpModel model = encode_problem(
      net, budget_config(ProblemKind::kVmnsplb, PowerKind::kGeneralisation, 5,
                         Rational(1, 3), Rational(1, 3), Rational(1, 3)));
  // Previous coefficients scaled to w=1/3 plus (w_v / V_max) u_n with
  // V_max = 6: x_n1 = (1/3)(1/3) - 0 + (1/3)(2/6) = 2/9.
  CHECK(objective_coeff(model, "x_n1") == Rational(2, 9));
  // x_n4 = (1/3)(1/6) - (1/15)(2) + (1/3)(1/6) = 1/18 - 2/15 + 1/18 = -1/45.
  CHECK(objective_coeff(model, "x_n4") == Rational(-1, 45));
  CHECK(objective_coeff(model, "y") == Rational(1, 3));

  // A zero value weight encodes identically to the two-weight problem.
  IlpModel degenerate = encode_problem(
      net, budget_config(ProblemKind::kVmnsplb, PowerKind::kGeneralisation, 5,
                         Rational(1, 2), Rational(1, 2), 0));
  IlpModel two_weight = encode_problem(
      net, budget_config(ProblemKind::kMnsplb, PowerKind::kGeneralisation, 5,
                         Rational(1, 2), Rational(1, 2)));
  CHECK(degenerate.objective == two_weight.objective);
  CHECK(degenerate.constraints == two_weight.constraints);
}

TEST_CASE("in-force modes reshape the model") {
  NormNet net = make_extended_net();
  ProblemConfig config = budget_config(
      ProblemKind::kMnsplb, PowerKind::kGeneralisation, 5, Rational(1, 2),
      Rational(1, 2));

  config.in_force_mode = InForceMode::kFlexible;
  IlpModel flexible = encode_problem(net, config);
  CHECK(flexible.variables.size() == 8);  // 7 norms + indicator
  CHECK_FALSE(has_row(flexible, "pin_n6"));

  config.in_force_mode = InForceMode::kPreserve;
  IlpModel preserve = encode_problem(net, config);
  const RowConstraint& pin = row(preserve, "pin_n6");
  CHECK(pin.relation == RowRelation::kEqual);
  CHECK(pin.rhs == 1);
  CHECK(pin.terms == std::vector<LinearTerm>{{"x_n6", 1}});
  CHECK(has_row(preserve, "pin_n7"));

  config.in_force_mode = InForceMode::kIgnore;
  IlpModel ignored = encode_problem(net, config);
  CHECK(ignored.variables == std::vector<std::string>{"x_n1", "x_n2", "x_n3",
                                                      "x_n4", "x_n5", "y"});
  CHECK_FALSE(has_row(ignored, "x_n1_n7"));
  // Dropping n6/n7 leaves exactly the base net's model.
  CHECK(ignored == encode_problem(make_airport_net(), config));
}

TEST_CASE("ancestor rows appear only beyond direct parent pairs") {
  NormNet chain = make_chain_net(3);
  IlpModel model = encode_problem(chain, ProblemConfig{});
  CHECK(has_row(model, "g2_m1_m2"));
  CHECK(has_row(model, "g2_m2_m3"));
  CHECK(has_row(model, "g4_m3_m1"));  // grandparent: not a direct pair
  CHECK_FALSE(has_row(model, "g4_m2_m1"));
  CHECK_FALSE(has_row(model, "g4_m3_m2"));
  CHECK_FALSE(has_row(model, "g3_m1"));  // single children: no sibling row

  // With deduplication off the redundant rows exist but select the same sets.
  IlpModel raw = encode_problem(chain, ProblemConfig{}, EncodeOptions{false});
  CHECK(raw.constraints.size() > model.constraints.size());
  for (std::size_t mask = 0; mask < 8; ++mask) {
    std::set<std::string> selected;
    for (std::size_t i = 0; i < 3; ++i) {
      if (mask & (std::size_t{1} << i)) {
        selected.insert("m" + std::to_string(i + 1));
      }
    }
    CHECK(satisfies(model, assignment_for(model, selected)) ==
          satisfies(raw, assignment_for(raw, selected)));
  }
}

TEST_CASE("feasible assignments are exactly the encodable systems") {
  NormNet net = make_airport_net();
  ProblemConfig config = budget_config(
      ProblemKind::kMnsplb, PowerKind::kInclusion, 5, Rational(1, 2),
      Rational(1, 2));
  IlpModel model = encode_problem(net, config);

  std::vector<std::string> ids;
  for (const auto& [id, n] : net.norms()) ids.push_back(id);
  for (std::size_t mask = 0; mask < 32; ++mask) {
    std::set<std::string> selected;
    Rational cost = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        selected.insert(ids[i]);
        cost += net.norm(ids[i]).cost;
      }
    }
    NormSystem omega = make_system({selected.begin(), selected.end()});
    const bool expected = ilp_feasible(net, omega) && cost <= 5;
    CHECK(satisfies(model, assignment_for(model, selected)) == expected);
  }
}

TEST_CASE("encoding rejects unusable inputs") {
  try {
    encode_problem(NormNet{}, ProblemConfig{});
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kZeroRMax);
  }

  NormNet valueless = build_norm_net(
      {make_norm("a", Modality::kObligation, "x", "y", 1, {})}, {});
  ProblemConfig valued = budget_config(ProblemKind::kVmnsplb,
                                       PowerKind::kInclusion, 5, 0, 0, 1);
  try {
    encode_problem(valueless, valued);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNormWithoutValues);
  }
}

TEST_CASE("LP text renders the documented grammar") {
  IlpModel model;
  model.variables = {"x_a", "x_b", "y"};
  model.objective = {{"x_a", Rational(3, 4)}, {"x_b", 0}, {"y", -2}};
  model.objective_offset = Rational(1, 2);
  RowConstraint r1{"cap", {{"x_a", 2}, {"x_b", 1}}, RowRelation::kLessEq, 3};
  RowConstraint r2{"anchor", {{"x_b", 1}}, RowRelation::kEqual, 1};
  model.constraints = {r1, r2};

  CHECK(export_lp(model) ==
        "MAXIMIZE\n"
        " obj: 0.75 x_a + 0 x_b + -2 y + 0.5 one\n"
        "SUBJECT TO\n"
        " anchor: x_b = 1\n"
        " cap: 2 x_a + x_b <= 3\n"
        "BINARY\n"
        " x_a x_b y\n"
        "END\n");

  // No constraints: the SUBJECT TO section disappears.
  model.constraints.clear();
  model.objective_offset = 0;
  CHECK(export_lp(model) ==
        "MAXIMIZE\n"
        " obj: 0.75 x_a + 0 x_b + -2 y\n"
        "BINARY\n"
        " x_a x_b y\n"
        "END\n");
}

TEST_CASE("exported text reaches a byte-stable fixpoint after one reparse") {
  NormNet net = make_airport_net();
  for (PowerKind kind :
       {PowerKind::kInclusion, PowerKind::kGeneralisation}) {
    IlpModel model = encode_problem(
        net, budget_config(ProblemKind::kMnsplb, kind, 5, Rational(1, 2),
                           Rational(1, 2)));
    const std::string text = export_lp(model);
    IlpModel reparsed = parse_lp(text);
    // Coefficients like 1/6 round to 12 significant digits, so the reparsed
    // model is a nearby rational model; its own rendering must be stable.
    CHECK(export_lp(reparsed) == text);
    CHECK(reparsed.variables == model.variables);
    CHECK(reparsed.constraints.size() == model.constraints.size());
  }
}

TEST_CASE("encoding is deterministic") {
  NormNet net = make_extended_net();
  ProblemConfig config = budget_config(
      ProblemKind::kVmnsplb, PowerKind::kInclusion, 7, Rational(1, 4),
      Rational(1, 4), Rational(1, 2));
  config.in_force_mode = InForceMode::kPreserve;
  CHECK(encode_problem(net, config) == encode_problem(net, config));
  CHECK(export_lp(encode_problem(net, config)) ==
        export_lp(encode_problem(net, config)));
}

}  // namespace
}  // namespace normnet
