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

#ifndef NORMNET_IO_HPP_
#define NORMNET_IO_HPP_

#include <string>

#include "normnet/norm_net.hpp"
#include "normnet/representation.hpp"
#include "normnet/solve.hpp"
#include "normnet/values.hpp"

namespace normnet {

// A norm-net JSON document: the validated net plus the optional value order
// (which is document data, not derived structure).
struct NormNetDocument {
  NormNet net;
  std::optional<ValueOrder> value_order;

  friend bool operator==(const NormNetDocument&, const NormNetDocument&) =
      default;
};

// Parses and validates a document:
//   {
//     "schema_version": 1,
//     "norms": [{"id", "modality", "addressee", "action",
//                "cost" (int or rational string, default 0),
//                "values" (list, default [])}, ...],
//     "generalisation": [[general, specific], ...],
//     "exclusivity": [[a, b], ...],
//     "substitutability": [[a, b], ...],
//     "value_order": [most preferred, ...],   (optional)
//     "in_force": [id, ...]                   (optional)
//   }
// Costs given as JSON floats are rejected; use strings for non-integers.
// Structural problems carry the JSON path; net validation errors propagate.
NormNetDocument parse_norm_net(const std::string& text);

// Canonical rendering: sorted object keys, norms sorted by id, id lists
// sorted, pairs normalized. parse(serialize(d)) == d for every valid d.
std::string serialize_norm_net(const NormNetDocument& doc);

// Custom representation power file: {"power": {"<norm id>": <int or rational
// string>, ...}}.
RepresentationAssignment parse_representation(const std::string& text);

// Deterministic JSON rendering of a solve report: status, exact objective
// (fraction and decimal strings), optima as sorted id arrays, truncated flag,
// stats. Two equal reports render byte-identically except elapsed_seconds.
std::string report_to_json(const SolveReport& report);

}  // namespace normnet

#endif  // NORMNET_IO_HPP_
