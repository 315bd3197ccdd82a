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

#include "normnet/generator.hpp"

namespace normnet {

NormNetDocument generate_random_net(const GeneratorParams& params) {
  if (params.p_x < 0.0 || params.p_x > 1.0 || params.p_s < 0.0 ||
      params.p_s > 1.0) {
    fail(Errc::kInvalidParams, "probabilities must lie in [0, 1]");
  }
  if (params.depth < 1 || params.branching < 1) {
    fail(Errc::kInvalidParams, "depth and branching must be at least 1");
  }

  SplitMix64 rng(params.seed);
  const std::size_t n = params.n;

  std::vector<Norm> norms;
  norms.reserve(n);
  std::vector<std::size_t> level(n, 1);        // 1 = root
  std::vector<std::size_t> child_count(n, 0);
  std::vector<int> parent(n, -1);

  static const char* kAddressees[] = {"citizens", "operators", "visitors",
                                      "officials"};

  // Draw order per norm: parent, modality, addressee, action, cost, values.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> eligible;
    for (std::size_t j = 0; j < i; ++j) {
      if (level[j] < params.depth && child_count[j] < params.branching) {
        eligible.push_back(j);
      }
    }
    const std::uint64_t pick = rng.next_below(eligible.size() + 1);
    if (pick > 0) {
      std::size_t p = eligible[pick - 1];
      parent[i] = static_cast<int>(p);
      level[i] = level[p] + 1;
      ++child_count[p];
    }

    Norm norm;
    norm.id = "n" + std::to_string(i + 1);
    norm.modality = static_cast<Modality>(rng.next_below(3));
    norm.addressee = kAddressees[rng.next_below(4)];
    norm.action = "act" + std::to_string(rng.next_below(4 * n) + 1);
    norm.cost = Rational(static_cast<unsigned>(rng.next_below(10)));
    switch (rng.next_below(3)) {
      case 0:
        norm.values = {"v1"};
        break;
      case 1:
        norm.values = {"v2"};
        break;
      default:
        norm.values = {"v1", "v2"};
        break;
    }
    norms.push_back(std::move(norm));
  }

  RelationSet relations;
  std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      relations.generalisation.push_back(
          {norms[parent[i]].id, norms[i].id});
      related[parent[i]][i] = related[i][parent[i]] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (related[i][j]) continue;
      if (rng.next_unit() < params.p_x) {
        relations.exclusivity.push_back({norms[i].id, norms[j].id});
        related[i][j] = related[j][i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (related[i][j]) continue;
      if (rng.next_unit() < params.p_s) {
        relations.substitutability.push_back({norms[i].id, norms[j].id});
        related[i][j] = related[j][i] = true;
      }
    }
  }

  NormNetDocument doc;
  doc.net = build_norm_net(std::move(norms), std::move(relations));
  doc.value_order = ValueOrder{{"v1", "v2"}};
  return doc;
}

}  // namespace normnet
