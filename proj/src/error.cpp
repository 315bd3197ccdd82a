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

#include "normnet/error.hpp"

namespace normnet {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kMalformedJson:
      return "MalformedJson";
    case Errc::kSchemaViolation:
      return "SchemaViolation";
    case Errc::kEmptyField:
      return "EmptyField";
    case Errc::kDuplicateId:
      return "DuplicateId";
    case Errc::kNegativeCost:
      return "NegativeCost";
    case Errc::kUnknownEndpoint:
      return "UnknownEndpoint";
    case Errc::kSelfRelation:
      return "SelfRelation";
    case Errc::kOverlappingRelationSets:
      return "OverlappingRelationSets";
    case Errc::kGeneralisationCycle:
      return "GeneralisationCycle";
    case Errc::kMultipleParents:
      return "MultipleParents";
    case Errc::kUnknownId:
      return "UnknownId";
    case Errc::kIdCollision:
      return "IdCollision";
    case Errc::kMissingEntry:
      return "MissingEntry";
    case Errc::kNonPositivePower:
      return "NonPositivePower";
    case Errc::kAncestorMonotonicityViolation:
      return "AncestorMonotonicityViolation";
    case Errc::kEmptyOrder:
      return "EmptyOrder";
    case Errc::kDuplicateValueId:
      return "DuplicateValueId";
    case Errc::kNormWithoutValues:
      return "NormWithoutValues";
    case Errc::kUnknownValueId:
      return "UnknownValueId";
    case Errc::kConfigInvariantViolation:
      return "ConfigInvariantViolation";
    case Errc::kMissingRepresentation:
      return "MissingRepresentation";
    case Errc::kZeroRMax:
      return "ZeroRMax";
    case Errc::kZeroVMax:
      return "ZeroVMax";
    case Errc::kNonBinaryVariable:
      return "NonBinaryVariable";
    case Errc::kTooLarge:
      return "TooLarge";
    case Errc::kInvalidParams:
      return "InvalidParams";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace normnet
