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

#include "normnet/representation.hpp"

#include <functional>

namespace normnet {

const char* power_kind_name(PowerKind kind) {
  switch (kind) {
    case PowerKind::kInclusion:
      return "inclusion";
    case PowerKind::kGeneralisation:
      return "generalisation";
    case PowerKind::kCustom:
      return "custom";
  }
  return "custom";
}

RepresentationAssignment inclusion_power(const NormNet& net) {
  RepresentationAssignment out;
  out.kind = PowerKind::kInclusion;
  std::function<const Rational&(const std::string&)> power =
      [&](const std::string& id) -> const Rational& {
    auto it = out.power.find(id);
    if (it != out.power.end()) return it->second;
    Rational p = 1;
    for (const std::string& child : net.children(id)) p += power(child);
    return out.power.emplace(id, std::move(p)).first->second;
  };
  for (const auto& [id, n] : net.norms()) power(id);
  return out;
}

RepresentationAssignment generalisation_power(const NormNet& net) {
  RepresentationAssignment out;
  out.kind = PowerKind::kGeneralisation;
  std::function<void(const std::string&, const Rational&)> descend =
      [&](const std::string& id, const Rational& p) {
        out.power.emplace(id, p);
        const std::set<std::string>& group = net.children(id);
        if (group.empty()) return;
        Rational share = p / Rational(static_cast<unsigned>(group.size()));
        for (const std::string& child : group) descend(child, share);
      };
  for (const std::string& root : net.roots()) descend(root, 1);
  return out;
}

void validate_representation(const NormNet& net,
                             const RepresentationAssignment& assignment) {
  for (const auto& [id, n] : net.norms()) {
    auto it = assignment.power.find(id);
    if (it == assignment.power.end()) {
      fail(Errc::kMissingEntry, "no representation power for norm '" + id + "'");
    }
    if (it->second <= 0) {
      fail(Errc::kNonPositivePower,
           "representation power of norm '" + id + "' is " +
               to_fraction_string(it->second) + "; must be positive");
    }
  }
  for (const auto& [id, ups] : net.ancestor_map()) {
    const Rational& own = assignment.power.at(id);
    for (const std::string& ancestor : ups) {
      if (own > assignment.power.at(ancestor)) {
        fail(Errc::kAncestorMonotonicityViolation,
             "norm '" + id + "' has power " + to_fraction_string(own) +
                 " exceeding its ancestor '" + ancestor + "' with " +
                 to_fraction_string(assignment.power.at(ancestor)));
      }
    }
  }
}

Rational system_power(const RepresentationAssignment& assignment,
                      const NormSystem& omega) {
  Rational total = 0;
  for (const std::string& id : make_system(omega.member_ids).member_ids) {
    auto it = assignment.power.find(id);
    if (it == assignment.power.end()) {
      fail(Errc::kMissingEntry, "no representation power for norm '" + id + "'");
    }
    total += it->second;
  }
  return total;
}

Rational max_representation(const NormNet& net,
                            const RepresentationAssignment& assignment) {
  Rational total = 0;
  for (const std::string& root : net.roots()) {
    auto it = assignment.power.find(root);
    if (it == assignment.power.end()) {
      fail(Errc::kMissingEntry,
           "no representation power for norm '" + root + "'");
    }
    total += it->second;
  }
  return total;
}

}  // namespace normnet
