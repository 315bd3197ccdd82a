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

#ifndef NORMNET_NORM_NET_HPP_
#define NORMNET_NORM_NET_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "normnet/error.hpp"
#include "normnet/rational.hpp"

namespace normnet {

enum class Modality { kObligation, kPermission, kProhibition };

const char* modality_name(Modality m);
std::optional<Modality> modality_from_name(const std::string& name);

// One deontic rule: modality(addressee, action), plus its monetary-equivalent
// cost and the moral values it supports.
struct Norm {
  std::string id;
  Modality modality = Modality::kObligation;
  std::string addressee;
  std::string action;
  Rational cost = 0;
  std::vector<std::string> values;  // sorted, unique

  friend bool operator==(const Norm&, const Norm&) = default;
};

// Unordered pairs are stored with endpoints sorted; generalisation pairs stay
// ordered (general, specific).
using IdPair = std::pair<std::string, std::string>;

struct RelationSet {
  std::vector<IdPair> generalisation;
  std::vector<IdPair> exclusivity;
  std::vector<IdPair> substitutability;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

// Any subset of a net's norms.
struct NormSystem {
  std::vector<std::string> member_ids;  // sorted, unique

  friend bool operator==(const NormSystem&, const NormSystem&) = default;
};

NormSystem make_system(std::vector<std::string> ids);

// Orders systems by cardinality, then lexicographically by sorted ids. This is
// the canonical order used everywhere optima are reported.
bool canonical_less(const NormSystem& a, const NormSystem& b);

struct CanonicalSystemLess {
  bool operator()(const NormSystem& a, const NormSystem& b) const {
    return canonical_less(a, b);
  }
};

enum class RelationKind {
  kGeneralisation,  // one member directly generalises another
  kAncestor,        // one member is a strict ancestor of another
  kExclusivity,
  kSubstitution,  // members connected by a substitutability chain
};

const char* relation_kind_name(RelationKind kind);

struct SoundnessWitness {
  IdPair pair;  // endpoints sorted
  RelationKind kind;

  friend bool operator==(const SoundnessWitness&, const SoundnessWitness&) =
      default;
};

struct SoundnessReport {
  bool conflict_free = true;
  bool non_redundant = true;
  bool sound = true;
  std::vector<SoundnessWitness> witnesses;
};

// Validated norm net. Immutable after construction; all derived structure
// (children, ancestors, substitution closure, roots) is precomputed, so reads
// are safe from any number of threads.
class NormNet {
 public:
  // Default-constructed nets are empty, which satisfies every invariant.
  NormNet() = default;

  const std::map<std::string, Norm>& norms() const { return norms_; }
  const RelationSet& relations() const { return relations_; }
  const std::set<std::string>& in_force() const { return in_force_; }
  std::size_t size() const { return norms_.size(); }

  bool contains(const std::string& id) const { return norms_.count(id) != 0; }
  const Norm& norm(const std::string& id) const;

  // Direct generalisation structure. Ids without children map to empty sets.
  const std::set<std::string>& children(const std::string& id) const;
  // Direct generaliser, if any.
  std::optional<std::string> parent(const std::string& id) const;
  // Norms that no other norm generalises.
  const std::set<std::string>& roots() const { return roots_; }
  const std::set<IdPair>& substitution_closure_pairs() const {
    return closure_;
  }
  const std::map<std::string, std::set<std::string>>& ancestor_map() const {
    return ancestors_;
  }

  friend bool operator==(const NormNet& a, const NormNet& b);

 private:
  friend NormNet build_norm_net(std::vector<Norm> norms, RelationSet relations,
                                std::set<std::string> in_force);

  std::map<std::string, Norm> norms_;
  RelationSet relations_;  // normalized: unordered pairs sorted, lists sorted
  std::set<std::string> in_force_;
  std::map<std::string, std::set<std::string>> children_;
  std::map<std::string, std::set<std::string>> ancestors_;
  std::map<std::string, std::string> parent_;
  std::set<IdPair> closure_;
  std::set<std::string> roots_;
};

// The single validation gate. Checks field well-formedness, endpoint
// existence, irreflexivity, mutual exclusivity of the three relation sets,
// the forest shape of generalisation (at most one generaliser, no cycles),
// and in_force membership; then computes all derived structure.
NormNet build_norm_net(std::vector<Norm> norms, RelationSet relations,
                       std::set<std::string> in_force = {});

// All norms reachable upward through generalisation (strict, transitive).
std::set<std::string> ancestors(const NormNet& net, const std::string& id);

// Pairs of distinct norms connected by substitutability chains.
std::set<IdPair> substitution_closure(const NormNet& net);

// Conflict-freedom (no exclusive pair) and non-redundancy (no pair related by
// direct generalisation, ancestry, or a substitutability chain), with one
// witness per violating pair and kind.
SoundnessReport soundness_report(const NormNet& net, const NormSystem& omega);

// Soundness plus the sibling rule: no norm with >= 2 children may have all of
// them selected. Exactly the feasible set of the constraint encoding, and the
// predicate the brute-force oracle filters with.
bool ilp_feasible(const NormNet& net, const NormSystem& omega);

// True iff the net has at least one norm (every singleton is sound).
bool exists_sound_nonempty(const NormNet& net);

// Merged net <N0 ∪ N, R ∪ R0> with in_force = ids of n0. Fully revalidated.
NormNet extend_with_in_force(const NormNet& net, const std::vector<Norm>& n0,
                             const RelationSet& r0);

// Copy of the net without the given norms and without any relation pair
// touching them. Used to drop in-force norms from a model entirely.
NormNet restrict_excluding(const NormNet& net,
                           const std::set<std::string>& removed);

}  // namespace normnet

#endif  // NORMNET_NORM_NET_HPP_
