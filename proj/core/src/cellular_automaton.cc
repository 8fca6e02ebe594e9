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

#include "causal_decomp/cellular_automaton.h"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "causal_decomp/errors.h"

namespace causal_decomp {
namespace {

void CheckRule(int rule) {
  if (rule < 0 || rule > 255) {
    throw DomainError("elementary CA rule must be in 0..255, got " +
                      std::to_string(rule));
  }
}

int CellOf(int state, int variable) { return (state >> (2 - variable)) & 1; }

}  // namespace

int RuleOutput(int rule, int a, int b, int c) {
  return (rule >> (4 * a + 2 * b + c)) & 1;
}

std::vector<uint8_t> StepAutomaton(int rule, std::span<const uint8_t> cells) {
  CheckRule(rule);
  const size_t n = cells.size();
  std::vector<uint8_t> next(n);
  for (size_t i = 0; i < n; ++i) {
    const int a = cells[(i + n - 1) % n];
    const int c = cells[(i + 1) % n];
    next[i] = static_cast<uint8_t>(RuleOutput(rule, a, cells[i], c));
  }
  return next;
}

NeighbourhoodDistribution UniformNeighbourhood() {
  NeighbourhoodDistribution d;
  d.fill(0.125);
  return d;
}

NeighbourhoodDistribution ZeroNeighbourhood() {
  NeighbourhoodDistribution d{};
  d[0] = 1.0;
  return d;
}

std::string_view ToString(Initialization init) {
  return init == Initialization::kRandom ? "random" : "middle1";
}

CaPrior EstimateCaPriorFrom(int rule, std::vector<uint8_t> initial,
                            const SimulationParams& params) {
  CheckRule(rule);
  if (params.cells < 3 || static_cast<size_t>(params.cells) != initial.size()) {
    throw DomainError("automaton needs at least 3 cells and an initial state "
                      "of matching length");
  }
  if (params.burn_in < 0 || params.steps <= params.burn_in) {
    throw DomainError("steps must exceed burn_in");
  }

  std::array<uint64_t, 8> counts{};
  std::vector<uint8_t> state = std::move(initial);
  const size_t n = state.size();
  for (int t = 0; t < params.steps; ++t) {
    if (t >= params.burn_in) {
      for (size_t i = 0; i < n; ++i) {
        const int a = state[(i + n - 1) % n];
        const int c = state[(i + 1) % n];
        ++counts[4 * a + 2 * state[i] + c];
      }
    }
    state = StepAutomaton(rule, state);
  }

  CaPrior prior;
  prior.rule = rule;
  prior.params = params;
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  for (int s = 0; s < 8; ++s) {
    prior.joint[s] = static_cast<double>(counts[s]) / static_cast<double>(total);
  }
  for (int v = 0; v < 3; ++v) {
    double ones = 0.0;
    for (int s = 0; s < 8; ++s) {
      if (CellOf(s, v)) ones += prior.joint[s];
    }
    if (ones == 0.0 || ones == 1.0) prior.degenerate = true;
  }
  return prior;
}

CaPrior EstimateCaPrior(int rule, Initialization init,
                        const SimulationParams& params, uint64_t seed) {
  if (params.cells < 3) throw DomainError("automaton needs at least 3 cells");
  std::vector<uint8_t> initial(params.cells, 0);
  if (init == Initialization::kRandom) {
    std::mt19937_64 rng(seed);
    // Top bit of each draw; std::bernoulli_distribution is not portable
    // across standard libraries.
    for (uint8_t& cell : initial) cell = static_cast<uint8_t>(rng() >> 63);
  } else {
    initial[params.cells / 2] = 1;
  }
  CaPrior prior = EstimateCaPriorFrom(rule, std::move(initial), params);
  prior.init = init;
  prior.seed = seed;
  return prior;
}

std::string_view ToString(PriorKind kind) {
  switch (kind) {
    case PriorKind::kMaxEnt:
      return "maxent";
    case PriorKind::kZeros:
      return "zeros";
    case PriorKind::kRandomInit:
      return "random";
    case PriorKind::kMiddleOne:
      return "middle1";
  }
  return "unknown";
}

PriorKind ParsePriorKind(std::string_view name) {
  for (PriorKind k : {PriorKind::kMaxEnt, PriorKind::kZeros,
                      PriorKind::kRandomInit, PriorKind::kMiddleOne}) {
    if (name == ToString(k)) return k;
  }
  throw DomainError("unknown prior \"" + std::string(name) +
                    "\"; expected one of maxent, zeros, random, middle1");
}

CaModel::CaModel(int rule, PriorKind kind,
                 std::optional<NeighbourhoodDistribution> empirical)
    : rule_(rule), kind_(kind) {
  CheckRule(rule);
  switch (kind) {
    case PriorKind::kMaxEnt:
      prior_ = UniformNeighbourhood();
      break;
    case PriorKind::kZeros:
      prior_ = ZeroNeighbourhood();
      break;
    case PriorKind::kRandomInit:
    case PriorKind::kMiddleOne:
      if (!empirical) {
        throw StateError(std::string("prior \"") +
                         std::string(ToString(kind)) +
                         "\" needs an estimated neighbourhood distribution");
      }
      prior_ = *empirical;
      break;
  }
  double total = 0.0;
  for (double p : prior_) {
    if (p < 0.0) throw DomainError("negative prior probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("neighbourhood prior sums to " + std::to_string(total));
  }
}

CaModel CaModel::WithPrior(int rule, const NeighbourhoodDistribution& prior) {
  return CaModel(rule, PriorKind::kRandomInit, prior);
}

double CaModel::Expectation(VariableSet subset,
                            std::span<const int> assignment) const {
  int fixed[3] = {-1, -1, -1};
  size_t k = 0;
  for (int i : subset.Indices()) fixed[i] = assignment[k++];

  // Marginal of the prior over the un-intervened cells, keyed by the full
  // state with intervened cells zeroed.
  std::array<double, 8> marginal{};
  int free_mask = 0;
  for (int v = 0; v < 3; ++v) {
    if (fixed[v] < 0) free_mask |= 1 << (2 - v);
  }
  for (int s = 0; s < 8; ++s) marginal[s & free_mask] += prior_[s];

  double expectation = 0.0;
  for (int s = 0; s < 8; ++s) {
    if ((s & ~free_mask) != 0) continue;  // one entry per free-cell context
    const double w = marginal[s];
    if (w == 0.0) continue;
    int cell[3];
    for (int v = 0; v < 3; ++v) cell[v] = fixed[v] >= 0 ? fixed[v] : CellOf(s, v);
    expectation += w * RuleOutput(rule_, cell[0], cell[1], cell[2]);
  }
  return expectation;
}

}  // namespace causal_decomp
