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

#include "causal_decomp/gates.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "causal_decomp/errors.h"

namespace causal_decomp {

std::string_view ToString(Gate gate) {
  switch (gate) {
    case Gate::kOr:
      return "or";
    case Gate::kAnd:
      return "and";
    case Gate::kXor:
      return "xor";
    case Gate::kCopy:
      return "copy";
  }
  return "unknown";
}

Gate ParseGate(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Gate g : {Gate::kOr, Gate::kAnd, Gate::kXor, Gate::kCopy}) {
    if (lower == ToString(g)) return g;
  }
  throw DomainError("unknown gate \"" + std::string(name) +
                    "\"; expected one of or, and, xor, copy");
}

int EvaluateGate(Gate gate, int x1, int x2) {
  switch (gate) {
    case Gate::kOr:
      return x1 | x2;
    case Gate::kAnd:
      return x1 & x2;
    case Gate::kXor:
      return x1 ^ x2;
    case Gate::kCopy:
      return x1;
  }
  return 0;
}

GateModel::GateModel(Gate gate, double p) : gate_(gate), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("gate input probability must lie in [0, 1]");
  }
}

double GateModel::Expectation(VariableSet subset,
                              std::span<const int> assignment) const {
  int fixed[2] = {-1, -1};
  size_t k = 0;
  for (int i : subset.Indices()) fixed[i] = assignment[k++];

  double expectation = 0.0;
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      const int x[2] = {x1, x2};
      double weight = 1.0;
      for (int i = 0; i < 2; ++i) {
        if (fixed[i] >= 0) {
          if (fixed[i] != x[i]) weight = 0.0;
        } else {
          weight *= x[i] ? p_ : 1.0 - p_;
        }
      }
      if (weight != 0.0) expectation += weight * EvaluateGate(gate_, x1, x2);
    }
  }
  return expectation;
}

}  // namespace causal_decomp
