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

#ifndef CAUSAL_DECOMP_MEASURE_H_
#define CAUSAL_DECOMP_MEASURE_H_

#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "causal_decomp/antichain.h"
#include "causal_decomp/lattice.h"

namespace causal_decomp {

// Which redundant extension produced a measure table.
enum class MeasureKind {
  kMaceCap,             // min of MACE over the members
  kSignedCeCap,         // sign-preserving min/max of signed effects
  kCounterfactualYCap,  // min of forced counterfactual outcomes
};

std::string_view ToString(MeasureKind kind);
// Throws ParseError.
MeasureKind ParseMeasureKind(std::string_view text);

// A real value for every non-empty subset of {0..n-1}.
class SubsetTable {
 public:
  explicit SubsetTable(int num_variables);

  int num_variables() const { return n_; }

  void Set(VariableSet subset, double value);
  std::optional<double> Get(VariableSet subset) const;
  // Throws IncompleteMeasureError when the value is missing.
  double at(VariableSet subset) const;

  // Subsets with no value yet, in canonical order.
  std::vector<VariableSet> Missing() const;
  bool complete() const { return Missing().empty(); }

 private:
  void CheckSubset(VariableSet subset) const;

  int n_;
  std::vector<std::optional<double>> values_;  // indexed by bit pattern
};

// A value on every node of a redundancy lattice.
struct MeasureTable {
  std::shared_ptr<const RedundancyLattice> lattice;
  std::vector<double> values;  // indexed by NodeId
  MeasureKind kind = MeasureKind::kMaceCap;

  double at(const Antichain& antichain) const {
    return values[lattice->IndexOf(antichain)];
  }
};

// Value at alpha is the minimum of `subset_measure` over the members of
// alpha. Throws IncompleteMeasureError for a missing subset value and
// DomainError for a negative one (signed inputs belong in
// SignedRedundantMeasure).
MeasureTable RedundantMeasure(std::shared_ptr<const RedundancyLattice> lattice,
                              const SubsetTable& subset_measure);

// Value at alpha is the smallest member effect when all are positive, the
// largest when all are negative, and 0 otherwise (including any member
// effect equal to 0).
MeasureTable SignedRedundantMeasure(
    std::shared_ptr<const RedundancyLattice> lattice,
    const SubsetTable& subset_effect);

struct OrderViolation {
  NodeId lower;
  NodeId upper;
  double lower_value;
  double upper_value;
};

inline constexpr double kMonotoneSlack = 1e-12;

// Cover pairs lower ⋖ upper with value(lower) > value(upper) + slack.
// Checking covers is enough because the order is their transitive closure.
std::vector<OrderViolation> CheckMonotone(const MeasureTable& measure,
                                          double slack = kMonotoneSlack);

// CSV with header "antichain,value,kind", one row per node in node order.
void WriteMeasureCsv(std::ostream& out, const MeasureTable& measure);
// Reads the format above. Every node must appear exactly once and all rows
// must agree on the kind. Throws ParseError.
MeasureTable ReadMeasureCsv(std::istream& in,
                            std::shared_ptr<const RedundancyLattice> lattice);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_MEASURE_H_
