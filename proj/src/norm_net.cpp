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

#include "normnet/norm_net.hpp"

#include <algorithm>

namespace normnet {
namespace {

IdPair sorted_pair(const std::string& a, const std::string& b) {
  return a < b ? IdPair(a, b) : IdPair(b, a);
}

std::string pair_text(const IdPair& p) {
  return "(" + p.first + ", " + p.second + ")";
}

void check_endpoints(const std::map<std::string, Norm>& norms,
                     const IdPair& pair, const char* set_name) {
  for (const std::string* id : {&pair.first, &pair.second}) {
    if (norms.count(*id) == 0) {
      fail(Errc::kUnknownEndpoint, std::string(set_name) + " pair " +
                                       pair_text(pair) +
                                       " references unknown norm '" + *id +
                                       "'");
    }
  }
  if (pair.first == pair.second) {
    fail(Errc::kSelfRelation, std::string(set_name) + " contains self-pair " +
                                  pair_text(pair));
  }
}

// Normalizes an unordered relation list: endpoints sorted within each pair,
// duplicates collapsed, list sorted.
std::vector<IdPair> normalize_unordered(const std::map<std::string, Norm>& norms,
                                        const std::vector<IdPair>& pairs,
                                        const char* set_name) {
  std::set<IdPair> out;
  for (const IdPair& p : pairs) {
    check_endpoints(norms, p, set_name);
    out.insert(sorted_pair(p.first, p.second));
  }
  return {out.begin(), out.end()};
}

// Union-find over norm ids, for substitutability components.
class DisjointSets {
 public:
  const std::string& find(const std::string& id) {
    auto it = parent_.find(id);
    if (it == parent_.end()) {
      it = parent_.emplace(id, id).first;
    }
    if (it->second != id) {
      it->second = find(it->second);
    }
    return it->second;
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a);
    std::string rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }

 private:
  std::map<std::string, std::string> parent_;
};

}  // namespace

const char* modality_name(Modality m) {
  switch (m) {
    case Modality::kObligation:
      return "obligation";
    case Modality::kPermission:
      return "permission";
    case Modality::kProhibition:
      return "prohibition";
  }
  return "obligation";
}

std::optional<Modality> modality_from_name(const std::string& name) {
  if (name == "obligation") return Modality::kObligation;
  if (name == "permission") return Modality::kPermission;
  if (name == "prohibition") return Modality::kProhibition;
  return std::nullopt;
}

const char* relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::kGeneralisation:
      return "generalisation";
    case RelationKind::kAncestor:
      return "ancestor";
    case RelationKind::kExclusivity:
      return "exclusivity";
    case RelationKind::kSubstitution:
      return "substitution";
  }
  return "unknown";
}

NormSystem make_system(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return NormSystem{std::move(ids)};
}

bool canonical_less(const NormSystem& a, const NormSystem& b) {
  if (a.member_ids.size() != b.member_ids.size()) {
    return a.member_ids.size() < b.member_ids.size();
  }
  return a.member_ids < b.member_ids;
}

const Norm& NormNet::norm(const std::string& id) const {
  auto it = norms_.find(id);
  if (it == norms_.end()) fail(Errc::kUnknownId, "no norm with id '" + id + "'");
  return it->second;
}

const std::set<std::string>& NormNet::children(const std::string& id) const {
  auto it = children_.find(id);
  if (it == children_.end()) {
    fail(Errc::kUnknownId, "no norm with id '" + id + "'");
  }
  return it->second;
}

std::optional<std::string> NormNet::parent(const std::string& id) const {
  if (norms_.count(id) == 0) {
    fail(Errc::kUnknownId, "no norm with id '" + id + "'");
  }
  auto it = parent_.find(id);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const NormNet& a, const NormNet& b) {
  return a.norms_ == b.norms_ && a.relations_ == b.relations_ &&
         a.in_force_ == b.in_force_;
}

NormNet build_norm_net(std::vector<Norm> norms, RelationSet relations,
                       std::set<std::string> in_force) {
  NormNet net;

  for (Norm& n : norms) {
    if (n.id.empty()) fail(Errc::kEmptyField, "norm with empty id");
    if (n.addressee.empty()) {
      fail(Errc::kEmptyField, "norm '" + n.id + "' has empty addressee");
    }
    if (n.action.empty()) {
      fail(Errc::kEmptyField, "norm '" + n.id + "' has empty action");
    }
    if (n.cost < 0) {
      fail(Errc::kNegativeCost, "norm '" + n.id + "' has cost " +
                                    to_fraction_string(n.cost));
    }
    std::sort(n.values.begin(), n.values.end());
    n.values.erase(std::unique(n.values.begin(), n.values.end()),
                   n.values.end());
    if (!net.norms_.emplace(n.id, n).second) {
      fail(Errc::kDuplicateId, "norm id '" + n.id + "' declared twice");
    }
  }

  // Generalisation: ordered pairs, deduplicated, one generaliser per norm.
  std::set<IdPair> gen;
  for (const IdPair& p : relations.generalisation) {
    check_endpoints(net.norms_, p, "generalisation");
    if (!gen.insert(p).second) continue;
    auto [it, fresh] = net.parent_.emplace(p.second, p.first);
    if (!fresh && it->second != p.first) {
      fail(Errc::kMultipleParents, "norm '" + p.second +
                                       "' is generalised by both '" +
                                       it->second + "' and '" + p.first + "'");
    }
  }
  net.relations_.generalisation = {gen.begin(), gen.end()};
  net.relations_.exclusivity =
      normalize_unordered(net.norms_, relations.exclusivity, "exclusivity");
  net.relations_.substitutability = normalize_unordered(
      net.norms_, relations.substitutability, "substitutability");

  // Mutual exclusivity of the three raw sets, orientation-insensitive.
  std::map<IdPair, const char*> seen;
  auto claim = [&seen](const IdPair& unordered, const char* set_name) {
    auto [it, fresh] = seen.emplace(unordered, set_name);
    // A repeat within generalisation itself is a reversed pair; the cycle
    // check below reports that case as GeneralisationCycle.
    if (!fresh && std::string(it->second) != set_name) {
      fail(Errc::kOverlappingRelationSets,
           "pair " + pair_text(unordered) + " appears in both " + it->second +
               " and " + set_name);
    }
  };
  for (const IdPair& p : net.relations_.generalisation) {
    claim(sorted_pair(p.first, p.second), "generalisation");
  }
  for (const IdPair& p : net.relations_.exclusivity) claim(p, "exclusivity");
  for (const IdPair& p : net.relations_.substitutability) {
    claim(p, "substitutability");
  }

  // Cycle detection: follow generaliser chains; every norm has at most one.
  // color: 0 unvisited, 1 on the current chain, 2 finished.
  std::map<std::string, int> color;
  for (const auto& [id, n] : net.norms_) {
    std::vector<const std::string*> chain;
    const std::string* cur = &id;
    while (cur != nullptr && color[*cur] == 0) {
      color[*cur] = 1;
      chain.push_back(cur);
      auto it = net.parent_.find(*cur);
      cur = it == net.parent_.end() ? nullptr : &it->second;
    }
    if (cur != nullptr && color[*cur] == 1) {
      fail(Errc::kGeneralisationCycle,
           "generalisation cycle through norm '" + *cur + "'");
    }
    for (const std::string* n_id : chain) color[*n_id] = 2;
  }

  for (const std::string& id : in_force) {
    if (net.norms_.count(id) == 0) {
      fail(Errc::kUnknownId, "in_force references unknown norm '" + id + "'");
    }
  }
  net.in_force_ = std::move(in_force);

  // Derived structure.
  for (const auto& [id, n] : net.norms_) {
    net.children_[id];
    if (net.parent_.count(id) == 0) net.roots_.insert(id);
  }
  for (const auto& [child, par] : net.parent_) {
    net.children_[par].insert(child);
  }
  for (const auto& [id, n] : net.norms_) {
    std::set<std::string>& up = net.ancestors_[id];
    auto it = net.parent_.find(id);
    while (it != net.parent_.end()) {
      up.insert(it->second);
      it = net.parent_.find(it->second);
    }
  }

  DisjointSets components;
  for (const IdPair& p : net.relations_.substitutability) {
    components.unite(p.first, p.second);
  }
  std::map<std::string, std::vector<std::string>> groups;
  for (const IdPair& p : net.relations_.substitutability) {
    for (const std::string* id : {&p.first, &p.second}) {
      groups[components.find(*id)].push_back(*id);
    }
  }
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        net.closure_.insert({members[i], members[j]});
      }
    }
  }

  return net;
}

std::set<std::string> ancestors(const NormNet& net, const std::string& id) {
  auto it = net.ancestor_map().find(id);
  if (it == net.ancestor_map().end()) {
    fail(Errc::kUnknownId, "no norm with id '" + id + "'");
  }
  return it->second;
}

std::set<IdPair> substitution_closure(const NormNet& net) {
  return net.substitution_closure_pairs();
}

SoundnessReport soundness_report(const NormNet& net, const NormSystem& omega) {
  NormSystem sys = make_system(omega.member_ids);
  for (const std::string& id : sys.member_ids) {
    if (!net.contains(id)) {
      fail(Errc::kUnknownId, "system references unknown norm '" + id + "'");
    }
  }

  std::set<IdPair> exclusive(net.relations().exclusivity.begin(),
                             net.relations().exclusivity.end());
  std::set<IdPair> direct_gen;
  for (const IdPair& p : net.relations().generalisation) {
    direct_gen.insert(sorted_pair(p.first, p.second));
  }

  SoundnessReport report;
  const auto& ids = sys.member_ids;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      IdPair p(ids[i], ids[j]);
      if (exclusive.count(p) != 0) {
        report.conflict_free = false;
        report.witnesses.push_back({p, RelationKind::kExclusivity});
      }
      if (direct_gen.count(p) != 0) {
        report.non_redundant = false;
        report.witnesses.push_back({p, RelationKind::kGeneralisation});
      } else if (net.ancestor_map().at(p.first).count(p.second) != 0 ||
                 net.ancestor_map().at(p.second).count(p.first) != 0) {
        report.non_redundant = false;
        report.witnesses.push_back({p, RelationKind::kAncestor});
      }
      if (net.substitution_closure_pairs().count(p) != 0) {
        report.non_redundant = false;
        report.witnesses.push_back({p, RelationKind::kSubstitution});
      }
    }
  }
  report.sound = report.conflict_free && report.non_redundant;
  return report;
}

bool ilp_feasible(const NormNet& net, const NormSystem& omega) {
  NormSystem sys = make_system(omega.member_ids);
  if (!soundness_report(net, sys).sound) return false;
  std::set<std::string> members(sys.member_ids.begin(), sys.member_ids.end());
  for (const auto& [id, n] : net.norms()) {
    const std::set<std::string>& ch = net.children(id);
    if (ch.size() < 2) continue;
    bool all = std::all_of(ch.begin(), ch.end(), [&members](const auto& c) {
      return members.count(c) != 0;
    });
    if (all) return false;
  }
  return true;
}

bool exists_sound_nonempty(const NormNet& net) { return net.size() > 0; }

NormNet extend_with_in_force(const NormNet& net, const std::vector<Norm>& n0,
                             const RelationSet& r0) {
  std::vector<Norm> merged;
  merged.reserve(net.size() + n0.size());
  for (const auto& [id, n] : net.norms()) merged.push_back(n);
  std::set<std::string> added;
  for (const Norm& n : n0) {
    if (net.contains(n.id)) {
      fail(Errc::kIdCollision,
           "in-force norm '" + n.id + "' collides with an existing norm");
    }
    merged.push_back(n);
    added.insert(n.id);
  }

  RelationSet rel = net.relations();
  auto append = [](std::vector<IdPair>& dst, const std::vector<IdPair>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  };
  append(rel.generalisation, r0.generalisation);
  append(rel.exclusivity, r0.exclusivity);
  append(rel.substitutability, r0.substitutability);

  return build_norm_net(std::move(merged), std::move(rel), std::move(added));
}

NormNet restrict_excluding(const NormNet& net,
                           const std::set<std::string>& removed) {
  std::vector<Norm> kept;
  for (const auto& [id, n] : net.norms()) {
    if (removed.count(id) == 0) kept.push_back(n);
  }
  auto untouched = [&removed](const IdPair& p) {
    return removed.count(p.first) == 0 && removed.count(p.second) == 0;
  };
  RelationSet rel;
  for (const IdPair& p : net.relations().generalisation) {
    if (untouched(p)) rel.generalisation.push_back(p);
  }
  for (const IdPair& p : net.relations().exclusivity) {
    if (untouched(p)) rel.exclusivity.push_back(p);
  }
  for (const IdPair& p : net.relations().substitutability) {
    if (untouched(p)) rel.substitutability.push_back(p);
  }
  std::set<std::string> in_force;
  for (const std::string& id : net.in_force()) {
    if (removed.count(id) == 0) in_force.insert(id);
  }
  return build_norm_net(std::move(kept), std::move(rel), std::move(in_force));
}

}  // namespace normnet
