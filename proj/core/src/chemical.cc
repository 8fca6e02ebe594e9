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

#include "causal_decomp/chemical.h"

#include "causal_decomp/errors.h"

namespace causal_decomp {

ChemicalModel::ChemicalModel(ChemicalRates rates, double x1, double x2,
                             double epsilon)
    : rates_(rates), x1_(x1), x2_(x2), epsilon_(epsilon) {
  if (rates.k1 < 0 || rates.k2 < 0 || rates.k3 < 0) {
    throw DomainError("reaction rates must be nonnegative");
  }
  if (x1 < 0 || x2 < 0 || epsilon < 0) {
    throw DomainError("concentrations and perturbation must be nonnegative");
  }
  baseline_ = SteadyState(x1, x2);
  if (!(baseline_ > 0.0)) {
    throw DomainError(
        "baseline steady state of Y is zero; the normalized outcome is "
        "undefined");
  }
}

double ChemicalModel::SteadyState(double x1, double x2) const {
  return rates_.k1 * x1 + rates_.k2 * x2 + rates_.k3 * x1 * x2;
}

double ChemicalModel::Expectation(VariableSet subset,
                                  std::span<const int> assignment) const {
  double delta[2] = {0.0, 0.0};
  size_t k = 0;
  for (int i : subset.Indices()) delta[i] = assignment[k++] ? epsilon_ : 0.0;
  return SteadyState(x1_ + delta[0], x2_ + delta[1]) / baseline_;
}

}  // namespace causal_decomp
