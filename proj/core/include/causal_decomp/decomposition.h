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

#ifndef CAUSAL_DECOMP_DECOMPOSITION_H_
#define CAUSAL_DECOMP_DECOMPOSITION_H_

#include <memory>
#include <ostream>
#include <vector>

#include "causal_decomp/antichain.h"
#include "causal_decomp/lattice.h"
#include "causal_decomp/measure.h"

namespace causal_decomp {

// Tolerance for reconstruction and nonnegativity of partial effects.
inline constexpr double kPartialTolerance = 1e-9;

// Partial effects: the Möbius inverse of a measure table.
struct Decomposition {
  std::shared_ptr<const RedundancyLattice> lattice;
  std::vector<double> partials;  // indexed by NodeId
  MeasureKind source_kind = MeasureKind::kMaceCap;
  // |sum of all partials - measure at top|.
  double reconstruction_residual = 0.0;
  // Cover pairs on which a kMaceCap table decreased. Non-zero only when
  // inverted with require_monotone = false.
  size_t order_violations = 0;

  double partial(const Antichain& antichain) const {
    return partials[lattice->IndexOf(antichain)];
  }
};

struct InvertOptions {
  // Reject kMaceCap tables that are not monotone. Interventional MACE is
  // monotone on subsets when un-intervened causes are independent; with a
  // correlated prior (e.g. empirical automaton statistics) it need not be,
  // and callers may accept that and inspect order_violations instead.
  bool require_monotone = true;
};

// partials(beta) = sum_{alpha <= beta} mu(alpha, beta) measure(alpha).
//
// For kMaceCap tables the measure must be monotone (MonotonicityError names
// the first violating cover pair), and partials in [-kPartialTolerance, 0)
// are clamped to 0. Anything more negative from a monotone table throws
// DomainError since it can only come from a broken oracle. A non-monotone
// table accepted through `options` keeps its raw partials. Other kinds are
// inverted as they are.
Decomposition Invert(const MeasureTable& measure,
                     const InvertOptions& options = {});

// Sum of partials over antichains none of whose members is a single
// variable.
double TotalSynergy(const Decomposition& decomposition);

// CSV with header "antichain,partial,kind".
void WriteDecompositionCsv(std::ostream& out,
                           const Decomposition& decomposition);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_DECOMPOSITION_H_
