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

#ifndef CAUSAL_DECOMP_CAUSES_H_
#define CAUSAL_DECOMP_CAUSES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "causal_decomp/antichain.h"
#include "causal_decomp/decomposition.h"
#include "causal_decomp/lattice.h"
#include "causal_decomp/measure.h"

namespace causal_decomp {

// The actually observed binary values of n variables together with the
// outcome as a function of every full assignment.
class ActualContext {
 public:
  // `outcome[x]` is Y at the assignment whose bit i is X_i. Size must be
  // 2^n. Throws DomainError.
  ActualContext(int n, VariableSet actual_ones, std::vector<double> outcome);

  static ActualContext FromFunction(int n, VariableSet actual_ones,
                                    const std::function<double(uint32_t)>& y);

  int num_variables() const { return n_; }
  VariableSet actual() const { return actual_; }
  double Outcome(uint32_t assignment) const { return outcome_[assignment]; }
  // Y with the variables in `forced` set to 1 and the rest at actual values.
  double ForcedOutcome(VariableSet forced) const {
    return outcome_[actual_.bits() | forced.bits()];
  }
  bool binary() const;

 private:
  int n_;
  VariableSet actual_;
  std::vector<double> outcome_;
};

// Parses 2^n lines "bits outcome" where bits is a string like "010" giving
// X_0, X_1, X_2 left to right. Blank lines and '#' comments are skipped.
// Throws ParseError.
ActualContext ParseTruthTable(std::string_view text, VariableSet actual_ones);

// Y_cap(alpha) = min over members A of Y(do(X_A = 1), rest actual).
double YCap(const ActualContext& context, const Antichain& alpha);

MeasureTable CounterfactualMeasure(
    const ActualContext& context,
    std::shared_ptr<const RedundancyLattice> lattice);

struct SufficientCause {
  NodeId node;
  Antichain family;  // each member is one conjunction of events X_i = 1
  // Forcing any single member conjunction to 1 yields Y = 1.
  bool verified = false;
};

struct CauseReport {
  Decomposition decomposition;
  std::vector<SufficientCause> sufficient;
  // The conjunction common to all sufficient causes, when non-empty.
  std::vector<VariableSet> necessary;
  // Y_cap was not monotone on the lattice; D may then be negative and the
  // cause reading is not guaranteed.
  bool non_monotone = false;
};

// Möbius inversion of Y_cap. Antichains with D = 1 are the sufficient
// causes, read as families of conjunctions. Requires a binary outcome
// (DomainError otherwise). The lattice must match the context's n.
CauseReport DecomposeCauses(const ActualContext& context,
                            std::shared_ptr<const RedundancyLattice> lattice);

// The same construction for a context in which some variables are already
// 1.
CauseReport ContextualShift(const ActualContext& context,
                            std::shared_ptr<const RedundancyLattice> lattice);

// Text report: D values of every node followed by the cause lists.
std::string FormatCauseReport(const CauseReport& report);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_CAUSES_H_
