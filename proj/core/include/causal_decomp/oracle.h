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

#ifndef CAUSAL_DECOMP_ORACLE_H_
#define CAUSAL_DECOMP_ORACLE_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "causal_decomp/antichain.h"
#include "causal_decomp/decomposition.h"
#include "causal_decomp/lattice.h"
#include "causal_decomp/measure.h"

namespace causal_decomp {

// Expected outcome under a joint intervention E[Y | do(X_A = x_A)] over
// variables with finite domains {0, ..., domain_size(i) - 1}.
//
// Implementations must be pure and defined for every subset (the empty one
// included) and every joint assignment.
class InterventionOracle {
 public:
  virtual ~InterventionOracle() = default;

  virtual int num_variables() const = 0;
  virtual int domain_size(int variable) const = 0;

  // `assignment[k]` is the value given to the k-th member of `subset` in
  // ascending index order.
  virtual double Expectation(VariableSet subset,
                             std::span<const int> assignment) const = 0;
};

// Oracle backed by a callable; used for ad hoc models and tests.
class FunctionOracle : public InterventionOracle {
 public:
  using Function = std::function<double(VariableSet, std::span<const int>)>;

  FunctionOracle(std::vector<int> domain_sizes, Function fn)
      : domain_sizes_(std::move(domain_sizes)), fn_(std::move(fn)) {}

  int num_variables() const override {
    return static_cast<int>(domain_sizes_.size());
  }
  int domain_size(int variable) const override {
    return domain_sizes_.at(variable);
  }
  double Expectation(VariableSet subset,
                     std::span<const int> assignment) const override {
    return fn_(subset, assignment);
  }

 private:
  std::vector<int> domain_sizes_;
  Function fn_;
};

struct MaceResult {
  double value = 0.0;
  // Assignments reaching the max and the min of the expectation; the
  // lexicographically smallest one on ties.
  std::vector<int> argmax;
  std::vector<int> argmin;
};

// Maximal average causal effect of intervening on `subset`: the spread
// between the largest and smallest interventional expectation over all
// joint assignments. Throws DomainError for an empty subset or a variable
// with an empty domain.
MaceResult Mace(const InterventionOracle& oracle, VariableSet subset);

// MACE of every non-empty subset.
SubsetTable MaceTable(const InterventionOracle& oracle);

// Redundant MACE on the lattice followed by Möbius inversion.
Decomposition DecomposeMace(const InterventionOracle& oracle,
                            std::shared_ptr<const RedundancyLattice> lattice,
                            const InvertOptions& options = {});

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_ORACLE_H_
