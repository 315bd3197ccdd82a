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

#include "normnet/values.hpp"

namespace normnet {

UtilityAssignment value_utilities(const ValueOrder& order) {
  if (order.ordered_ids.empty()) {
    fail(Errc::kEmptyOrder, "value order has no values");
  }
  UtilityAssignment out;
  // Walk from least preferred to most preferred, keeping the running sum of
  // everything less preferred.
  BigInt tail_sum = 0;
  for (auto it = order.ordered_ids.rbegin(); it != order.ordered_ids.rend();
       ++it) {
    BigInt u = 1 + tail_sum;
    tail_sum += u;
    if (!out.utility.emplace(*it, std::move(u)).second) {
      fail(Errc::kDuplicateValueId,
           "value '" + *it + "' appears twice in the order");
    }
  }
  return out;
}

std::map<std::string, BigInt> norm_value_support(const NormNet& net,
                                                 const UtilityAssignment& u) {
  std::map<std::string, BigInt> out;
  for (const auto& [id, n] : net.norms()) {
    if (n.values.empty()) {
      fail(Errc::kNormWithoutValues,
           "norm '" + id + "' supports no value; value support is undefined");
    }
    BigInt total = 0;
    for (const std::string& value : n.values) {
      auto it = u.utility.find(value);
      if (it == u.utility.end()) {
        fail(Errc::kUnknownValueId, "norm '" + id +
                                        "' references value '" + value +
                                        "' missing from the order");
      }
      total += it->second;
    }
    out.emplace(id, std::move(total));
  }
  return out;
}

BigInt system_value_support(const std::map<std::string, BigInt>& u_n,
                            const NormSystem& omega) {
  BigInt total = 0;
  for (const std::string& id : make_system(omega.member_ids).member_ids) {
    auto it = u_n.find(id);
    if (it == u_n.end()) {
      fail(Errc::kMissingEntry, "no value support entry for norm '" + id + "'");
    }
    total += it->second;
  }
  return total;
}

BigInt max_value_support(const std::map<std::string, BigInt>& u_n) {
  BigInt total = 0;
  for (const auto& [id, u] : u_n) total += u;
  return total;
}

}  // namespace normnet
