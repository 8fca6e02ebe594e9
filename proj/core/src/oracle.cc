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

#include "causal_decomp/oracle.h"

#include <string>

#include "causal_decomp/errors.h"

namespace causal_decomp {

MaceResult Mace(const InterventionOracle& oracle, VariableSet subset) {
  if (subset.empty()) {
    throw DomainError("MACE needs a non-empty set of variables");
  }
  if (!subset.IsSubsetOf(VariableSet::Full(oracle.num_variables()))) {
    throw DomainError("subset {" + subset.Digits() +
                      "} refers to variables the oracle does not have");
  }
  const std::vector<int> members = subset.Indices();
  std::vector<int> radix;
  for (int i : members) {
    const int size = oracle.domain_size(i);
    if (size < 1) {
      throw DomainError("variable " + std::to_string(i) +
                        " has an empty domain");
    }
    radix.push_back(size);
  }

  // Odometer over assignments in lexicographic order, first member most
  // significant. Strict comparisons keep the first optimum on ties.
  std::vector<int> assignment(members.size(), 0);
  MaceResult result;
  double hi = 0.0;
  double lo = 0.0;
  bool first = true;
  while (true) {
    const double e = oracle.Expectation(subset, assignment);
    if (first || e > hi) {
      hi = e;
      result.argmax = assignment;
    }
    if (first || e < lo) {
      lo = e;
      result.argmin = assignment;
    }
    first = false;
    int k = static_cast<int>(assignment.size()) - 1;
    while (k >= 0 && ++assignment[k] == radix[k]) {
      assignment[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  result.value = hi - lo;
  return result;
}

SubsetTable MaceTable(const InterventionOracle& oracle) {
  SubsetTable table(oracle.num_variables());
  for (uint32_t bits = 1; bits < (1u << oracle.num_variables()); ++bits) {
    const VariableSet s = VariableSet::FromBits(bits);
    table.Set(s, Mace(oracle, s).value);
  }
  return table;
}

Decomposition DecomposeMace(const InterventionOracle& oracle,
                            std::shared_ptr<const RedundancyLattice> lattice,
                            const InvertOptions& options) {
  return Invert(RedundantMeasure(std::move(lattice), MaceTable(oracle)),
                options);
}

}  // namespace causal_decomp
