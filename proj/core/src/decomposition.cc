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

#include "causal_decomp/decomposition.h"

#include <cmath>
#include <string>

#include "causal_decomp/errors.h"
#include "causal_decomp/text_format.h"

namespace causal_decomp {

Decomposition Invert(const MeasureTable& measure,
                     const InvertOptions& options) {
  const RedundancyLattice& lattice = *measure.lattice;
  if (measure.values.size() != lattice.size()) {
    throw IncompleteMeasureError("measure table has " +
                                 std::to_string(measure.values.size()) +
                                 " values for " +
                                 std::to_string(lattice.size()) + " nodes");
  }
  size_t order_violations = 0;
  if (measure.kind == MeasureKind::kMaceCap) {
    std::vector<OrderViolation> violations = CheckMonotone(measure);
    order_violations = violations.size();
    if (!violations.empty() && options.require_monotone) {
      const OrderViolation& v = violations.front();
      throw MonotonicityError(
          "redundant MACE is not monotone: " +
          Label(lattice.node(v.lower)) + " = " + FormatDouble(v.lower_value) +
          " exceeds its cover " + Label(lattice.node(v.upper)) + " = " +
          FormatDouble(v.upper_value) + "; the intervention oracle is broken");
    }
  }

  Decomposition out;
  out.lattice = measure.lattice;
  out.source_kind = measure.kind;
  out.order_violations = order_violations;
  out.partials = MobiusTransform<double>(lattice, measure.values);

  if (measure.kind == MeasureKind::kMaceCap && order_violations == 0) {
    for (NodeId id = 0; id < lattice.size(); ++id) {
      double& c = out.partials[id];
      if (c >= 0.0) continue;
      if (c < -kPartialTolerance) {
        throw DomainError("partial effect of " + Label(lattice.node(id)) +
                          " is " + FormatDouble(c) +
                          " although the redundant MACE is monotone");
      }
      c = 0.0;
    }
  }

  double total = 0.0;
  for (double c : out.partials) total += c;
  out.reconstruction_residual =
      std::abs(total - measure.values[lattice.top()]);
  return out;
}

double TotalSynergy(const Decomposition& decomposition) {
  double total = 0.0;
  const RedundancyLattice& lattice = *decomposition.lattice;
  for (NodeId id = 0; id < lattice.size(); ++id) {
    if (!lattice.node(id).HasSingletonMember()) {
      total += decomposition.partials[id];
    }
  }
  return total;
}

void WriteDecompositionCsv(std::ostream& out,
                           const Decomposition& decomposition) {
  out << "antichain,partial,kind\n";
  for (NodeId id = 0; id < decomposition.lattice->size(); ++id) {
    out << Label(decomposition.lattice->node(id)) << ','
        << FormatDouble(decomposition.partials[id]) << ','
        << ToString(decomposition.source_kind) << '\n';
  }
}

}  // namespace causal_decomp
