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

#ifndef NORMNET_TESTS_SUPPORT_FIXTURES_HPP_
#define NORMNET_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "normnet/norm_net.hpp"
#include "normnet/values.hpp"

namespace normnet::testing {

inline Norm make_norm(std::string id, Modality modality, std::string addressee,
                      std::string action, Rational cost,
                      std::vector<std::string> values) {
  Norm n;
  n.id = std::move(id);
  n.modality = modality;
  n.addressee = std::move(addressee);
  n.action = std::move(action);
  n.cost = std::move(cost);
  n.values = std::move(values);
  return n;
}

// The border-control example: n3 generalises n4 and n5, the border-crossing
// permission n1 conflicts with both obligations that reach all passengers,
// and registering a passport substitutes for the full form.
inline std::vector<Norm> airport_norms(const Rational& c1 = 0) {
  return {
      make_norm("n1", Modality::kPermission, "all_passengers", "cross_border",
                c1, {"free_movement"}),
      make_norm("n2", Modality::kObligation, "all_passengers",
                "register_passport", 2, {"safety"}),
      make_norm("n3", Modality::kObligation, "all_passengers", "fulfil_form",
                5, {"safety"}),
      make_norm("n4", Modality::kObligation, "locals", "fulfil_form", 2,
                {"safety"}),
      make_norm("n5", Modality::kObligation, "visitors", "fulfil_form", 2,
                {"safety"}),
  };
}

inline RelationSet airport_relations() {
  RelationSet r;
  r.generalisation = {{"n3", "n4"}, {"n3", "n5"}};
  r.exclusivity = {{"n1", "n2"}, {"n1", "n3"}};
  r.substitutability = {{"n2", "n3"}};
  return r;
}

inline NormNet make_airport_net(const Rational& c1 = 0) {
  return build_norm_net(airport_norms(c1), airport_relations());
}

inline ValueOrder airport_value_order() {
  return ValueOrder{{"free_movement", "safety"}};
}

// The airport net plus two norms already in force: a luggage prohibition n6
// and a passport-control obligation n7 (which also conflicts with n1).
inline NormNet make_extended_net(const Rational& c1 = 0) {
  std::vector<Norm> norms = airport_norms(c1);
  norms.push_back(make_norm("n6", Modality::kProhibition, "all_passengers",
                            "unattend_luggage", 1, {"safety"}));
  norms.push_back(make_norm("n7", Modality::kObligation, "all_passengers",
                            "passport_control", 1, {"safety"}));
  RelationSet r = airport_relations();
  r.exclusivity.push_back({"n1", "n7"});
  return build_norm_net(std::move(norms), std::move(r), {"n6", "n7"});
}

// a -> {b, c}, b -> {d, e}: the two-level hierarchy whose generalisation
// powers are 1, 1/2, 1/2, 1/4, 1/4.
inline NormNet make_two_level_net() {
  std::vector<Norm> norms;
  for (const char* id : {"a", "b", "c", "d", "e"}) {
    norms.push_back(
        make_norm(id, Modality::kObligation, "anyone", std::string("do_") + id,
                  1, {"v1"}));
  }
  RelationSet r;
  r.generalisation = {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "e"}};
  return build_norm_net(std::move(norms), std::move(r));
}

// m1 -> m2 -> ... -> m<k>, each node generalising the next.
inline NormNet make_chain_net(int k) {
  std::vector<Norm> norms;
  RelationSet r;
  for (int i = 1; i <= k; ++i) {
    const std::string id = "m" + std::to_string(i);
    norms.push_back(make_norm(id, Modality::kObligation, "anyone",
                              "step_" + std::to_string(i), 1, {"v1"}));
    if (i > 1) r.generalisation.push_back({"m" + std::to_string(i - 1), id});
  }
  return build_norm_net(std::move(norms), std::move(r));
}

inline NormSystem sys(std::vector<std::string> ids) {
  return make_system(std::move(ids));
}

}  // namespace normnet::testing

#endif  // NORMNET_TESTS_SUPPORT_FIXTURES_HPP_
