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

#ifndef NORMNET_VALUES_HPP_
#define NORMNET_VALUES_HPP_

#include <map>
#include <string>
#include <vector>

#include "normnet/norm_net.hpp"
#include "normnet/rational.hpp"

namespace normnet {

// Strict total order over moral values, most preferred first.
struct ValueOrder {
  std::vector<std::string> ordered_ids;

  friend bool operator==(const ValueOrder&, const ValueOrder&) = default;
};

struct UtilityAssignment {
  std::map<std::string, BigInt> utility;
};

// Utility of the i-th value (1-based from the front) is one more than the sum
// of the utilities of all less preferred values, so a more preferred value
// always outweighs every combination of less preferred ones. Equivalently
// u(v_i) = 2^(|V|-i).
UtilityAssignment value_utilities(const ValueOrder& order);

// Per-norm value support: the summed utility of the values a norm promotes.
// Every norm must support at least one value, and only known ones.
std::map<std::string, BigInt> norm_value_support(const NormNet& net,
                                                 const UtilityAssignment& u);

// Sum of per-norm support over the system; 0 for the empty system.
BigInt system_value_support(const std::map<std::string, BigInt>& u_n,
                            const NormSystem& omega);

// Normalisation constant: the summed support of every norm in the map.
BigInt max_value_support(const std::map<std::string, BigInt>& u_n);

}  // namespace normnet

#endif  // NORMNET_VALUES_HPP_
