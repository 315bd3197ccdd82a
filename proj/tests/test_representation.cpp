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

#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "normnet/generator.hpp"
#include "normnet/representation.hpp"
#include "support/fixtures.hpp"

namespace normnet {
namespace {

using testing::make_airport_net;
using testing::make_chain_net;
using testing::make_two_level_net;
using testing::sys;

TEST_CASE("inclusion power counts a norm's whole subtree") {
  NormNet net = make_airport_net();
  RepresentationAssignment r = inclusion_power(net);
  CHECK(r.kind == PowerKind::kInclusion);
  CHECK(r.power.at("n1") == 1);
  CHECK(r.power.at("n2") == 1);
  CHECK(r.power.at("n3") == 3);
  CHECK(r.power.at("n4") == 1);
  CHECK(r.power.at("n5") == 1);
  CHECK(max_representation(net, r) == 5);
}

TEST_CASE("generalisation power splits equally along sibling groups") {
  NormNet net = make_airport_net();
  RepresentationAssignment r = generalisation_power(net);
  CHECK(r.kind == PowerKind::kGeneralisation);
  CHECK(r.power.at("n1") == 1);
  CHECK(r.power.at("n2") == 1);
  CHECK(r.power.at("n3") == 1);
  CHECK(r.power.at("n4") == Rational(1, 2));
  CHECK(r.power.at("n5") == Rational(1, 2));
  CHECK(max_representation(net, r) == 3);
}

TEST_CASE("the two-level hierarchy halves twice") {
  NormNet net = make_two_level_net();
  RepresentationAssignment g = generalisation_power(net);
  CHECK(g.power.at("a") == 1);
  CHECK(g.power.at("b") == Rational(1, 2));
  CHECK(g.power.at("c") == Rational(1, 2));
  CHECK(g.power.at("d") == Rational(1, 4));
  CHECK(g.power.at("e") == Rational(1, 4));
  CHECK(max_representation(net, g) == 1);

  RepresentationAssignment i = inclusion_power(net);
  CHECK(i.power.at("a") == 5);
  CHECK(i.power.at("b") == 3);
  CHECK(i.power.at("c") == 1);
  CHECK(i.power.at("d") == 1);
  CHECK(max_representation(net, i) == 5);
}

TEST_CASE("a chain keeps generalisation power 1 on every node") {
  // Singleton sibling groups split nothing.
  NormNet chain = make_chain_net(4);
  RepresentationAssignment g = generalisation_power(chain);
  for (const auto& [id, power] : g.power) CHECK(power == 1);
  RepresentationAssignment i = inclusion_power(chain);
  CHECK(i.power.at("m1") == 4);
  CHECK(i.power.at("m4") == 1);
}

TEST_CASE("generated forests satisfy the structural power identities") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorParams params;
    params.n = 12;
    params.depth = 3;
    params.branching = 3;
    params.seed = seed;
    NormNet net = generate_random_net(params).net;

    RepresentationAssignment inc = inclusion_power(net);
    RepresentationAssignment gen = generalisation_power(net);
    for (const auto& [id, n] : net.norms()) {
      // Inclusion power is the subtree size.
      BigInt subtree = 1;
      std::vector<std::string> frontier(net.children(id).begin(),
                                        net.children(id).end());
      while (!frontier.empty()) {
        std::string cur = frontier.back();
        frontier.pop_back();
        subtree += 1;
        frontier.insert(frontier.end(), net.children(cur).begin(),
                        net.children(cur).end());
      }
      CHECK(inc.power.at(id) == Rational(subtree));

      // Generalisation power is the product of 1/|sibling group| along the
      // path from the root.
      Rational expected = 1;
      std::string cur = id;
      while (auto parent = net.parent(cur)) {
        expected /= BigInt(net.children(*parent).size());
        cur = *parent;
      }
      CHECK(gen.power.at(id) == expected);
    }

    // Both built-in assignments pass their own validation.
    validate_representation(net, inc);
    validate_representation(net, gen);
  }
}

TEST_CASE("validation enforces coverage, positivity and monotonicity") {
  NormNet net = make_airport_net();
  RepresentationAssignment r = inclusion_power(net);

  validate_representation(net, r);  // baseline: must not throw

  RepresentationAssignment missing = r;
  missing.power.erase("n4");
  CHECK_THROWS_WITH_AS(validate_representation(net, missing),
                       doctest::Contains("n4"), Error);

  RepresentationAssignment zero = r;
  zero.power["n2"] = 0;
  try {
    validate_representation(net, zero);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNonPositivePower);
  }

  // A child outweighing its ancestor breaks monotonicity.
  RepresentationAssignment inverted = r;
  inverted.power["n4"] = 7;
  try {
    validate_representation(net, inverted);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kAncestorMonotonicityViolation);
    CHECK(std::string(e.what()).find("n4") != std::string::npos);
    CHECK(std::string(e.what()).find("n3") != std::string::npos);
  }

  // Equality with the ancestor is allowed.
  RepresentationAssignment flat = r;
  for (auto& [id, power] : flat.power) power = 3;
  validate_representation(net, flat);
}

TEST_CASE("monotonicity is checked against all ancestors, not just parents") {
  NormNet chain = make_chain_net(3);
  RepresentationAssignment r;
  r.power = {{"m1", Rational(1, 2)}, {"m2", 5}, {"m3", 1}};
  // m3 <= m2 holds, but m3 > m1 and m2 > m1 do not.
  try {
    validate_representation(chain, r);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kAncestorMonotonicityViolation);
  }
}

TEST_CASE("system power is additive and bounded by the root sum") {
  NormNet net = make_airport_net();
  RepresentationAssignment r = generalisation_power(net);

  CHECK(system_power(r, sys({})) == 0);
  CHECK(system_power(r, sys({"n1", "n4"})) == Rational(3, 2));
  CHECK(system_power(r, sys({"n1"})) + system_power(r, sys({"n4", "n5"})) ==
        system_power(r, sys({"n1", "n4", "n5"})));

  NormSystem unknown = sys({"n1", "zz"});
  CHECK_THROWS_AS(system_power(r, unknown), Error);

  // No encodable system can beat the root sum under a monotone assignment.
  std::vector<std::string> ids;
  for (const auto& [id, n] : net.norms()) ids.push_back(id);
  for (std::size_t mask = 0; mask < (1u << ids.size()); ++mask) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1u << i)) members.push_back(ids[i]);
    }
    NormSystem omega = make_system(members);
    if (!ilp_feasible(net, omega)) continue;
    CHECK(system_power(r, omega) <= max_representation(net, r));
  }
}

TEST_CASE("custom assignments feed the same aggregate helpers") {
  NormNet net = make_airport_net();
  RepresentationAssignment custom;
  custom.kind = PowerKind::kCustom;
  custom.power = {{"n1", Rational(7, 2)},
                  {"n2", 2},
                  {"n3", 2},
                  {"n4", 1},
                  {"n5", Rational(1, 3)}};
  validate_representation(net, custom);
  CHECK(max_representation(net, custom) == Rational(15, 2));
  CHECK(system_power(custom, sys({"n1", "n5"})) == Rational(23, 6));
}

}  // namespace
}  // namespace normnet
