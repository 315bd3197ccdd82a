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

#ifndef NORMNET_ERROR_HPP_
#define NORMNET_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace normnet {

// Every failure raised by the library carries one of these codes so callers
// (and tests) can dispatch without parsing message text.
enum class Errc {
  // Document parsing.
  kMalformedJson,
  kSchemaViolation,
  // Net construction.
  kEmptyField,
  kDuplicateId,
  kNegativeCost,
  kUnknownEndpoint,
  kSelfRelation,
  kOverlappingRelationSets,
  kGeneralisationCycle,
  kMultipleParents,
  kUnknownId,
  kIdCollision,
  // Representation power.
  kMissingEntry,
  kNonPositivePower,
  kAncestorMonotonicityViolation,
  // Value orders and utilities.
  kEmptyOrder,
  kDuplicateValueId,
  kNormWithoutValues,
  kUnknownValueId,
  // Problem encoding.
  kConfigInvariantViolation,
  kMissingRepresentation,
  kZeroRMax,
  kZeroVMax,
  // Solving.
  kNonBinaryVariable,
  kTooLarge,
  // Generator and sweep parameters.
  kInvalidParams,
};

// Stable spelling of a code, e.g. "DuplicateId".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace normnet

#endif  // NORMNET_ERROR_HPP_
