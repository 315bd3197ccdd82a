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

#include "normnet/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include <json.hpp>

namespace normnet {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& what) {
  fail(Errc::kSchemaViolation, path + ": " + what);
}

const json& expect(const json& node, const char* type_name,
                   bool (json::*predicate)() const, const std::string& path) {
  if (!(node.*predicate)()) {
    schema_error(path, std::string("expected ") + type_name);
  }
  return node;
}

std::string expect_string(const json& node, const std::string& path) {
  expect(node, "a string", &json::is_string, path);
  return node.get<std::string>();
}

void reject_unknown_keys(const json& object,
                         const std::vector<std::string>& known,
                         const std::string& path) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      schema_error(path, "unknown key '" + key + "'");
    }
  }
}

// Costs and powers: exact integers directly, anything else as a string
// ("0.5", "3/7"). Floating point literals are rejected so no document can
// smuggle rounding error into exact arithmetic.
Rational expect_rational(const json& node, const std::string& path) {
  if (node.is_number_integer()) {
    return Rational(BigInt(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    auto parsed = parse_rational(node.get<std::string>());
    if (!parsed) {
      schema_error(path, "cannot parse '" + node.get<std::string>() +
                             "' as a rational number");
    }
    return *parsed;
  }
  if (node.is_number_float()) {
    schema_error(path,
                 "float literals are not exact; write the value as a string");
  }
  schema_error(path, "expected an integer or a rational string");
}

std::vector<IdPair> parse_pair_list(const json& doc, const char* key) {
  std::vector<IdPair> out;
  if (!doc.contains(key)) return out;
  const std::string path = std::string("$.") + key;
  expect(doc[key], "an array", &json::is_array, path);
  std::size_t i = 0;
  for (const json& entry : doc[key]) {
    const std::string entry_path = path + "[" + std::to_string(i++) + "]";
    if (!entry.is_array() || entry.size() != 2) {
      schema_error(entry_path, "expected a pair of norm ids");
    }
    out.emplace_back(expect_string(entry[0], entry_path + "[0]"),
                     expect_string(entry[1], entry_path + "[1]"));
  }
  return out;
}

json cost_to_json(const Rational& cost) {
  if (denominator(cost) == 1 && cost >= std::numeric_limits<std::int64_t>::min() &&
      cost <= std::numeric_limits<std::int64_t>::max()) {
    return numerator(cost).convert_to<std::int64_t>();
  }
  return to_fraction_string(cost);
}

json pairs_to_json(const std::vector<IdPair>& pairs) {
  json out = json::array();
  for (const IdPair& p : pairs) out.push_back({p.first, p.second});
  return out;
}

}  // namespace

NormNetDocument parse_norm_net(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::kMalformedJson, e.what());
  }
  if (!doc.is_object()) schema_error("$", "expected an object");
  reject_unknown_keys(doc,
                      {"schema_version", "norms", "generalisation",
                       "exclusivity", "substitutability", "value_order",
                       "in_force"},
                      "$");

  if (!doc.contains("schema_version")) {
    schema_error("$", "missing schema_version");
  }
  if (!doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<std::int64_t>() != 1) {
    schema_error("$.schema_version", "expected 1");
  }
  if (!doc.contains("norms")) schema_error("$", "missing norms");
  expect(doc["norms"], "an array", &json::is_array, "$.norms");

  std::vector<Norm> norms;
  std::size_t i = 0;
  for (const json& entry : doc["norms"]) {
    const std::string path = "$.norms[" + std::to_string(i++) + "]";
    expect(entry, "an object", &json::is_object, path);
    reject_unknown_keys(
        entry, {"id", "modality", "addressee", "action", "cost", "values"},
        path);
    for (const char* required : {"id", "modality", "addressee", "action"}) {
      if (!entry.contains(required)) {
        schema_error(path, std::string("missing ") + required);
      }
    }
    Norm n;
    n.id = expect_string(entry["id"], path + ".id");
    const std::string modality =
        expect_string(entry["modality"], path + ".modality");
    auto parsed_modality = modality_from_name(modality);
    if (!parsed_modality) {
      schema_error(path + ".modality", "unknown modality '" + modality + "'");
    }
    n.modality = *parsed_modality;
    n.addressee = expect_string(entry["addressee"], path + ".addressee");
    n.action = expect_string(entry["action"], path + ".action");
    if (entry.contains("cost")) {
      n.cost = expect_rational(entry["cost"], path + ".cost");
    }
    if (entry.contains("values")) {
      expect(entry["values"], "an array", &json::is_array, path + ".values");
      std::size_t j = 0;
      for (const json& value : entry["values"]) {
        n.values.push_back(
            expect_string(value, path + ".values[" + std::to_string(j++) + "]"));
      }
    }
    norms.push_back(std::move(n));
  }

  RelationSet relations;
  relations.generalisation = parse_pair_list(doc, "generalisation");
  relations.exclusivity = parse_pair_list(doc, "exclusivity");
  relations.substitutability = parse_pair_list(doc, "substitutability");

  std::set<std::string> in_force;
  if (doc.contains("in_force")) {
    expect(doc["in_force"], "an array", &json::is_array, "$.in_force");
    std::size_t j = 0;
    for (const json& id : doc["in_force"]) {
      in_force.insert(
          expect_string(id, "$.in_force[" + std::to_string(j++) + "]"));
    }
  }

  NormNetDocument out;
  if (doc.contains("value_order")) {
    expect(doc["value_order"], "an array", &json::is_array, "$.value_order");
    ValueOrder order;
    std::size_t j = 0;
    for (const json& id : doc["value_order"]) {
      order.ordered_ids.push_back(
          expect_string(id, "$.value_order[" + std::to_string(j++) + "]"));
    }
    out.value_order = std::move(order);
  }

  try {
    out.net = build_norm_net(std::move(norms), std::move(relations),
                             std::move(in_force));
  } catch (const Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    throw Error(e.code(), "document: " + message);
  }
  return out;
}

std::string serialize_norm_net(const NormNetDocument& doc) {
  json root;
  root["schema_version"] = 1;
  json norms = json::array();
  for (const auto& [id, n] : doc.net.norms()) {
    json entry;
    entry["id"] = n.id;
    entry["modality"] = modality_name(n.modality);
    entry["addressee"] = n.addressee;
    entry["action"] = n.action;
    entry["cost"] = cost_to_json(n.cost);
    entry["values"] = n.values;  // already sorted
    norms.push_back(std::move(entry));
  }
  root["norms"] = std::move(norms);
  root["generalisation"] = pairs_to_json(doc.net.relations().generalisation);
  root["exclusivity"] = pairs_to_json(doc.net.relations().exclusivity);
  root["substitutability"] =
      pairs_to_json(doc.net.relations().substitutability);
  root["in_force"] = doc.net.in_force();  // set: already sorted
  if (doc.value_order.has_value()) {
    root["value_order"] = doc.value_order->ordered_ids;  // order is meaning
  }
  return root.dump(2) + "\n";
}

RepresentationAssignment parse_representation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::kMalformedJson, e.what());
  }
  if (!doc.is_object()) schema_error("$", "expected an object");
  reject_unknown_keys(doc, {"power"}, "$");
  if (!doc.contains("power") || !doc["power"].is_object()) {
    schema_error("$", "expected a 'power' object");
  }
  RepresentationAssignment out;
  out.kind = PowerKind::kCustom;
  for (const auto& [id, value] : doc["power"].items()) {
    out.power.emplace(id, expect_rational(value, "$.power." + id));
  }
  return out;
}

std::string report_to_json(const SolveReport& report) {
  json root;
  root["status"] = solve_status_name(report.status);
  if (report.objective.has_value()) {
    root["objective"] = to_fraction_string(*report.objective);
    root["objective_decimal"] = to_decimal_string(*report.objective);
  } else {
    root["objective"] = nullptr;
    root["objective_decimal"] = nullptr;
  }
  json optima = json::array();
  for (const NormSystem& sys : report.optima) optima.push_back(sys.member_ids);
  root["optima"] = std::move(optima);
  root["truncated"] = report.truncated;
  root["stats"]["nodes"] = report.stats.nodes;
  root["stats"]["elapsed_seconds"] = report.stats.elapsed_seconds;
  return root.dump(2) + "\n";
}

}  // namespace normnet
