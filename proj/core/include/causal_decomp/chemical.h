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

#ifndef CAUSAL_DECOMP_CHEMICAL_H_
#define CAUSAL_DECOMP_CHEMICAL_H_

#include <span>

#include "causal_decomp/oracle.h"

namespace causal_decomp {

// X_1 and X_2 form Y spontaneously at rates k1, k2 and jointly at rate k3;
// Y degrades at rate 1.
struct ChemicalRates {
  double k1 = 10.0;
  double k2 = 1.0;
  double k3 = 0.0;
};

// Perturbation model: an experimenter adds delta_i in {0, epsilon} to the
// concentration of X_i, and the outcome is the steady-state concentration
// of Y normalized by its unperturbed value. Variable i has domain {0, 1},
// where 1 means delta_i = epsilon.
class ChemicalModel : public InterventionOracle {
 public:
  // Throws DomainError for negative rates or concentrations and when the
  // baseline steady state is not positive.
  ChemicalModel(ChemicalRates rates, double x1, double x2, double epsilon);

  // [Y]_ss = k1 x1 + k2 x2 + k3 x1 x2.
  double SteadyState(double x1, double x2) const;

  int num_variables() const override { return 2; }
  int domain_size(int) const override { return 2; }
  double Expectation(VariableSet subset,
                     std::span<const int> assignment) const override;

 private:
  ChemicalRates rates_;
  double x1_;
  double x2_;
  double epsilon_;
  double baseline_;
};

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_CHEMICAL_H_
