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

#ifndef CAUSAL_DECOMP_CELLULAR_AUTOMATON_H_
#define CAUSAL_DECOMP_CELLULAR_AUTOMATON_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causal_decomp/oracle.h"

namespace causal_decomp {

// Elementary cellular automata. The decomposition treats the left
// neighbour A_t, the cell itself B_t and the right neighbour C_t as
// variables 0, 1, 2 acting on B_{t+1}.

inline constexpr int kCaLeft = 0;
inline constexpr int kCaCentre = 1;
inline constexpr int kCaRight = 2;

// Wolfram numbering: the next state of neighbourhood (a, b, c) is bit
// 4a + 2b + c of the rule number. Unchecked; `rule` must be in 0..255.
int RuleOutput(int rule, int a, int b, int c);

// One synchronous update with periodic boundaries.
std::vector<uint8_t> StepAutomaton(int rule, std::span<const uint8_t> cells);

// Probability of each neighbourhood (a, b, c), indexed 4a + 2b + c.
using NeighbourhoodDistribution = std::array<double, 8>;

NeighbourhoodDistribution UniformNeighbourhood();
NeighbourhoodDistribution ZeroNeighbourhood();

enum class Initialization { kRandom, kMiddleOne };

std::string_view ToString(Initialization init);

struct SimulationParams {
  int cells = 100;
  int steps = 10000;
  int burn_in = 500;
};

// Empirical neighbourhood statistics of one simulated run, with the full
// provenance of the run.
struct CaPrior {
  NeighbourhoodDistribution joint{};
  int rule = 0;
  Initialization init = Initialization::kRandom;
  SimulationParams params;
  uint64_t seed = 0;
  // Set when some single cell of the neighbourhood never takes one of its
  // values, so interventions condition on a restricted context.
  bool degenerate = false;
};

// Simulates `params.steps` updates from the given initialization and pools
// neighbourhood frequencies over all positions of the states at times
// burn_in, ..., steps - 1. Random initialization draws each cell
// independently with probability 1/2 from std::mt19937_64 seeded with
// `seed`; middle-one sets only cell cells / 2. Throws DomainError for
// cells < 3, steps <= burn_in or burn_in < 0.
CaPrior EstimateCaPrior(int rule, Initialization init,
                        const SimulationParams& params, uint64_t seed);

// Same statistic for an explicit initial state.
CaPrior EstimateCaPriorFrom(int rule, std::vector<uint8_t> initial,
                            const SimulationParams& params);

enum class PriorKind { kMaxEnt, kZeros, kRandomInit, kMiddleOne };

std::string_view ToString(PriorKind kind);
// Accepts "maxent", "zeros", "random", "middle1". Throws DomainError.
PriorKind ParsePriorKind(std::string_view name);

// Interventional model of one cell update. Un-intervened neighbourhood
// cells are averaged under the marginal of the prior over those cells
// (back-door adjustment), and the rule's truth table gives the outcome.
class CaModel : public InterventionOracle {
 public:
  // kMaxEnt and kZeros carry their own prior. The empirical kinds require
  // `empirical`; StateError when it is missing. DomainError for rule > 255
  // or a prior that does not sum to 1 within 1e-12.
  CaModel(int rule, PriorKind kind,
          std::optional<NeighbourhoodDistribution> empirical = std::nullopt);

  // Arbitrary prior; kind() reports kRandomInit.
  static CaModel WithPrior(int rule, const NeighbourhoodDistribution& prior);

  int rule() const { return rule_; }
  PriorKind kind() const { return kind_; }
  const NeighbourhoodDistribution& prior() const { return prior_; }

  int num_variables() const override { return 3; }
  int domain_size(int) const override { return 2; }
  double Expectation(VariableSet subset,
                     std::span<const int> assignment) const override;

 private:
  int rule_;
  PriorKind kind_;
  NeighbourhoodDistribution prior_;
};

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_CELLULAR_AUTOMATON_H_
