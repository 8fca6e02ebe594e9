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

#ifndef CAUSAL_DECOMP_TOOLS_COMMANDS_H_
#define CAUSAL_DECOMP_TOOLS_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "causal_decomp/cellular_automaton.h"
#include "causal_decomp/chemical.h"
#include "causal_decomp/gates.h"

namespace causal_decomp::cli {

enum class OutputFormat { kCsv, kJson };

// Throws DomainError for anything but "csv" or "json".
OutputFormat ParseOutputFormat(std::string_view text);

// A parameter sweep: `points` values from `start` to `stop`, evenly spaced
// on a linear or logarithmic axis.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int points = 1;
  bool log_scale = false;

  std::vector<double> Values() const;
};

// "start:stop:points" with an optional ":log" or ":lin" suffix. A single
// number is a one-point grid. Throws DomainError.
Grid ParseGrid(std::string_view text, bool default_log = false);

// "0-19", "1,5,7" or a mix such as "0-3,10". Throws DomainError.
std::vector<uint64_t> ParseSeeds(std::string_view text);

// Column-oriented result of a command, rendered as CSV or JSON.
struct ResultTable {
  using Cell = std::variant<std::string, double, int64_t>;

  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void Write(std::ostream& out, OutputFormat format) const;
};

struct GatesConfig {
  Gate gate = Gate::kOr;
  Grid grid{0.01, 0.99, 99, false};
};

// Columns: gate, p, antichain, named, partial, residual.
ResultTable RunGates(const GatesConfig& config);

struct CaConfig {
  int rule = 90;
  std::vector<PriorKind> priors{PriorKind::kMaxEnt};
  SimulationParams simulation;
  std::vector<uint64_t> seeds = ParseSeeds("0-19");
  // Antichains whose |mean| stays below this under every prior are
  // dropped; 0 keeps everything.
  double min_display = 0.01;
  bool per_seed = false;
  // Fail on a non-monotone redundant MACE instead of reporting it. Empirical
  // priors correlate the neighbourhood cells, which can break monotonicity.
  bool strict = false;
};

// Columns: rule, prior, antichain, named, mean, std, max_residual,
// order_violations, cells, steps, burn_in, seeds, degenerate_seeds.
// Per-seed mode replaces mean/std by partial and reports one seed per row.
// Analytic priors are evaluated once and carry seeds "-".
ResultTable RunCa(const CaConfig& config);

struct ChemicalConfig {
  ChemicalRates rates{10.0, 1.0, 0.0};
  double x1 = 1.0;
  double x2 = 1.0;
  double epsilon = 1.0;
  Grid k3_grid{1e-2, 1e3, 60, true};
};

// Columns: k3, antichain, named, partial, residual.
ResultTable RunChemical(const ChemicalConfig& config);

// Columns: context, antichain, named, measure, partial, residual. The input
// is an external-effects JSON document.
ResultTable RunDecompose(std::string_view effects_json);

enum class LatticeExport { kDot, kTable, kSummary };
LatticeExport ParseLatticeExport(std::string_view text);

std::string RunLattice(int n, LatticeExport what);

// `context` is a 0/1 string of actual values, X_0 first; empty means all
// zeros.
std::string RunCauses(std::string_view truth_table, std::string_view context,
                      OutputFormat format);

}  // namespace causal_decomp::cli

#endif  // CAUSAL_DECOMP_TOOLS_COMMANDS_H_
