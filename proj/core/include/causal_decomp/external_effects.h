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

#ifndef CAUSAL_DECOMP_EXTERNAL_EFFECTS_H_
#define CAUSAL_DECOMP_EXTERNAL_EFFECTS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "causal_decomp/measure.h"

namespace causal_decomp {

// Signed effects of every non-empty subset of variables, computed outside
// this library, one table per context.
struct EffectContext {
  std::string label;
  SubsetTable effects;
};

struct ExternalEffects {
  std::vector<std::string> variables;
  std::vector<EffectContext> contexts;
  // Top-level string fields other than the two above, e.g. a model id.
  std::map<std::string, std::string> metadata;
};

// Parses a JSON document
//
//   {"variables": ["not", "bad"],
//    "contexts": [{"label": "this movie is",
//                  "effects": {"0": -1.2, "1": -3.4, "0,1": 2.5}}]}
//
// where effect keys are comma-joined ascending variable indices. Every
// context must give all 2^n - 1 subsets. Throws ParseError naming the
// offending location.
ExternalEffects LoadExternalEffects(std::string_view json_text);

// Inverse of LoadExternalEffects.
std::string DumpExternalEffects(const ExternalEffects& effects);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_EXTERNAL_EFFECTS_H_
