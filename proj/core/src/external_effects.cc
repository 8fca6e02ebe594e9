/*
 * Copyright 2026 The causal_decomp Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "causal_decomp/external_effects.h"

#include <string>
#include <utility>

#include "causal_decomp/errors.h"
#include "json.hpp"

namespace causal_decomp {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ParseError("external effects, " + where + ": " + what);
}

// "0,2" -> {0, 2}. Indices must be ascending, distinct and < n.
VariableSet ParseSubsetKey(const std::string& key, int n,
                           const std::string& where) {
  if (key.empty()) Fail(where, "empty subset key");
  uint32_t bits = 0;
  int last = -1;
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t comma = key.find(',', pos);
    if (comma == std::string::npos) comma = key.size();
    const std::string token = key.substr(pos, comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") !=
                             std::string::npos || token.size() > 2) {
      Fail(where, "malformed subset key \"" + key + "\"");
    }
    const int index = std::stoi(token);
    if (index >= n) {
      Fail(where, "subset key \"" + key + "\" names variable " + token +
                      " but only " + std::to_string(n) + " are declared");
    }
    if (index <= last) {
      Fail(where, "subset key \"" + key + "\" is not strictly ascending");
    }
    last = index;
    bits |= 1u << index;
    pos = comma + 1;
  }
  return VariableSet::FromBits(bits);
}

std::string SubsetKey(VariableSet s) {
  std::string key;
  for (int i : s.Indices()) {
    if (!key.empty()) key += ',';
    key += std::to_string(i);
  }
  return key;
}

}  // namespace

ExternalEffects LoadExternalEffects(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    Fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) Fail("document", "top level must be an object");

  ExternalEffects out;
  if (!doc.contains("variables") || !doc["variables"].is_array()) {
    Fail("variables", "missing array of variable labels");
  }
  for (size_t i = 0; i < doc["variables"].size(); ++i) {
    const json& v = doc["variables"][i];
    if (!v.is_string()) {
      Fail("variables[" + std::to_string(i) + "]", "label must be a string");
    }
    out.variables.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(out.variables.size());
  if (n < 1 || n > kMaxVariables) {
    Fail("variables", "need 1.." + std::to_string(kMaxVariables) +
                          " variables, got " + std::to_string(n));
  }

  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "variables" || it.key() == "contexts") continue;
    if (it->is_string()) out.metadata[it.key()] = it->get<std::string>();
  }

  if (!doc.contains("contexts") || !doc["contexts"].is_array()) {
    Fail("contexts", "missing array of contexts");
  }
  const json& contexts = doc["contexts"];
  for (size_t c = 0; c < contexts.size(); ++c) {
    const std::string where = "contexts[" + std::to_string(c) + "]";
    const json& ctx = contexts[c];
    if (!ctx.is_object()) Fail(where, "context must be an object");
    if (!ctx.contains("label") || !ctx["label"].is_string()) {
      Fail(where + ".label", "missing string label");
    }
    if (!ctx.contains("effects") || !ctx["effects"].is_object()) {
      Fail(where + ".effects", "missing effects object");
    }
    EffectContext record{ctx["label"].get<std::string>(), SubsetTable(n)};
    for (auto e = ctx["effects"].begin(); e != ctx["effects"].end(); ++e) {
      const std::string at = where + ".effects[\"" + e.key() + "\"]";
      const VariableSet s = ParseSubsetKey(e.key(), n, at);
      if (!e->is_number()) Fail(at, "malformed number");
      if (record.effects.Get(s)) Fail(at, "duplicate subset");
      record.effects.Set(s, e->get<double>());
    }
    std::vector<VariableSet> missing = record.effects.Missing();
    if (!missing.empty()) {
      Fail(where + ".effects",
           "missing subset \"" + SubsetKey(missing.front()) + "\"");
    }
    out.contexts.push_back(std::move(record));
  }
  return out;
}

std::string DumpExternalEffects(const ExternalEffects& effects) {
  json doc = json::object();
  for (const auto& [k, v] : effects.metadata) doc[k] = v;
  doc["variables"] = effects.variables;
  json contexts = json::array();
  const int n = static_cast<int>(effects.variables.size());
  for (const EffectContext& ctx : effects.contexts) {
    json e = json::object();
    for (uint32_t bits = 1; bits < (1u << n); ++bits) {
      const VariableSet s = VariableSet::FromBits(bits);
      e[SubsetKey(s)] = ctx.effects.at(s);
    }
    contexts.push_back({{"label", ctx.label}, {"effects", e}});
  }
  doc["contexts"] = contexts;
  return doc.dump(2) + "\n";
}

}  // namespace causal_decomp
