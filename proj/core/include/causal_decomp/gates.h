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

#ifndef CAUSAL_DECOMP_GATES_H_
#define CAUSAL_DECOMP_GATES_H_

#include <span>
#include <string_view>

#include "causal_decomp/oracle.h"

namespace causal_decomp {

enum class Gate { kOr, kAnd, kXor, kCopy };

std::string_view ToString(Gate gate);
// Accepts "or", "and", "xor", "copy" in any case. Throws DomainError.
Gate ParseGate(std::string_view name);

// COPY returns its first input.
int EvaluateGate(Gate gate, int x1, int x2);

// Two-input gate with independent Bernoulli(p) inputs. The graph is a
// collider, so do(X_A = x) equals conditioning on X_A = x and the
// un-intervened input is marginalized at its prior.
class GateModel : public InterventionOracle {
 public:
  // Throws DomainError unless 0 <= p <= 1.
  GateModel(Gate gate, double p);

  Gate gate() const { return gate_; }
  double p() const { return p_; }

  int num_variables() const override { return 2; }
  int domain_size(int) const override { return 2; }
  double Expectation(VariableSet subset,
                     std::span<const int> assignment) const override;

 private:
  Gate gate_;
  double p_;
};

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_GATES_H_
