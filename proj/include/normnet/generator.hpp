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

#ifndef NORMNET_GENERATOR_HPP_
#define NORMNET_GENERATOR_HPP_

#include <cstdint>

#include "normnet/io.hpp"

namespace normnet {

// SplitMix64 (Steele, Lea & Flood; public domain reference constants). Fixed
// here, rather than using std::mt19937 + distributions, so generated nets are
// bit-reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // next() modulo bound. The modulo bias is below 2^-53 for the tiny bounds
  // used here and keeps the derivation trivially documentable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // 53 uniform bits into [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

struct GeneratorParams {
  std::size_t n = 0;          // number of norms
  std::size_t depth = 1;      // max generalisation depth; 1 = no hierarchy
  std::size_t branching = 2;  // max children per parent
  double p_x = 0.0;           // exclusivity probability per unrelated pair
  double p_s = 0.0;           // substitutability probability per unrelated pair
  std::uint64_t seed = 0;
};

// Deterministic random net with ids n1..n<n>: a generalisation forest first
// (each norm picks uniformly among "stay a root" and the eligible parents),
// then exclusivity and substitutability edges over still-unrelated pairs,
// integer costs 0..9, and a two-value order with a non-empty value subset per
// norm. Always passes validation by construction.
NormNetDocument generate_random_net(const GeneratorParams& params);

}  // namespace normnet

#endif  // NORMNET_GENERATOR_HPP_
