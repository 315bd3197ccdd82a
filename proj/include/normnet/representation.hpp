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

#ifndef NORMNET_REPRESENTATION_HPP_
#define NORMNET_REPRESENTATION_HPP_

#include <map>
#include <string>

#include "normnet/norm_net.hpp"
#include "normnet/rational.hpp"

namespace normnet {

enum class PowerKind { kInclusion, kGeneralisation, kCustom };

const char* power_kind_name(PowerKind kind);

// Positive per-norm representation power.
struct RepresentationAssignment {
  PowerKind kind = PowerKind::kCustom;
  std::map<std::string, Rational> power;

  friend bool operator==(const RepresentationAssignment&,
                         const RepresentationAssignment&) = default;
};

// Inclusion power: 1 for childless norms, otherwise 1 plus the summed
// inclusion power of the children. Always a positive integer.
RepresentationAssignment inclusion_power(const NormNet& net);

// Generalisation power: roots score 1; each sibling group divides its
// parent's power equally. Values lie in (0, 1].
RepresentationAssignment generalisation_power(const NormNet& net);

// Checks coverage (every norm has an entry), positivity, and
// ancestor-monotonicity: power(n) <= power(a) for every ancestor a of n.
void validate_representation(const NormNet& net,
                             const RepresentationAssignment& assignment);

// Sum of powers over the system; 0 for the empty system.
Rational system_power(const RepresentationAssignment& assignment,
                      const NormSystem& omega);

// Normalisation constant: the summed power of the net's root norms, an upper
// bound on any system's power under ancestor-monotone assignments.
Rational max_representation(const NormNet& net,
                            const RepresentationAssignment& assignment);

}  // namespace normnet

#endif  // NORMNET_REPRESENTATION_HPP_
