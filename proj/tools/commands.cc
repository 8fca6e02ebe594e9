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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "causal_decomp/antichain.h"
#include "causal_decomp/causes.h"
#include "causal_decomp/decomposition.h"
#include "causal_decomp/errors.h"
#include "causal_decomp/external_effects.h"
#include "causal_decomp/lattice.h"
#include "causal_decomp/measure.h"
#include "causal_decomp/oracle.h"
#include "causal_decomp/text_format.h"
#include "json.hpp"

namespace causal_decomp::cli {
namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kGateNames = {"X1", "X2"};
const std::vector<std::string> kCaNames = {"A", "B", "C"};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string CellText(const ResultTable::Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) return FormatDouble(*d);
  return std::to_string(std::get<int64_t>(cell));
}

double MaxResidual(const std::vector<Decomposition>& ds) {
  double r = 0.0;
  for (const Decomposition& d : ds) r = std::max(r, d.reconstruction_residual);
  return r;
}

int64_t MaxViolations(const std::vector<Decomposition>& ds) {
  size_t v = 0;
  for (const Decomposition& d : ds) v = std::max(v, d.order_violations);
  return static_cast<int64_t>(v);
}

// Population mean and standard deviation of node `id` across runs.
std::pair<double, double> MeanStd(const std::vector<Decomposition>& runs,
                                  NodeId id) {
  double sum = 0.0;
  for (const Decomposition& d : runs) sum += d.partials[id];
  const double mean = sum / static_cast<double>(runs.size());
  double sq = 0.0;
  for (const Decomposition& d : runs) {
    sq += (d.partials[id] - mean) * (d.partials[id] - mean);
  }
  return {mean, std::sqrt(sq / static_cast<double>(runs.size()))};
}

std::string JoinSeeds(const std::vector<uint64_t>& seeds) {
  std::string out;
  for (uint64_t s : seeds) {
    if (!out.empty()) out += ';';
    out += std::to_string(s);
  }
  return out;
}

}  // namespace

OutputFormat ParseOutputFormat(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw DomainError("unknown output format \"" + std::string(text) +
                    "\"; expected csv or json");
}

std::vector<double> Grid::Values() const {
  std::vector<double> values;
  if (points == 1) return {start};
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    if (log_scale) {
      const double lo = std::log10(start);
      const double hi = std::log10(stop);
      values.push_back(std::pow(10.0, lo + t * (hi - lo)));
    } else {
      values.push_back(start + t * (stop - start));
    }
  }
  return values;
}

Grid ParseGrid(std::string_view text, bool default_log) {
  std::vector<std::string_view> parts = SplitFields(text, ':');
  Grid grid;
  grid.log_scale = default_log;
  auto fail = [&] {
    throw DomainError("bad grid \"" + std::string(text) +
                      "\"; expected start:stop:points[:log|:lin]");
  };
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      grid.log_scale = true;
    } else if (parts[3] == "lin") {
      grid.log_scale = false;
    } else {
      fail();
    }
    parts.pop_back();
  }
  if (parts.size() == 1) {
    std::optional<double> v = ParseDouble(parts[0]);
    if (!v) fail();
    grid.start = grid.stop = *v;
    grid.points = 1;
    grid.log_scale = false;
    return grid;
  }
  if (parts.size() != 3) fail();
  std::optional<double> start = ParseDouble(parts[0]);
  std::optional<double> stop = ParseDouble(parts[1]);
  std::optional<double> points = ParseDouble(parts[2]);
  if (!start || !stop || !points || *points < 1 ||
      *points != std::floor(*points)) {
    fail();
  }
  grid.start = *start;
  grid.stop = *stop;
  grid.points = static_cast<int>(*points);
  if (grid.log_scale && (grid.start <= 0 || grid.stop <= 0)) {
    throw DomainError("log-spaced grid needs positive endpoints");
  }
  return grid;
}

std::vector<uint64_t> ParseSeeds(std::string_view text) {
  std::vector<uint64_t> seeds;
  auto number = [&](std::string_view s) -> uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != s.npos ||
        s.size() > 19) {
      throw DomainError("bad seed list \"" + std::string(text) + "\"");
    }
    return std::stoull(std::string(s));
  };
  for (std::string_view item : SplitFields(text, ',')) {
    const size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      seeds.push_back(number(item));
      continue;
    }
    const uint64_t lo = number(item.substr(0, dash));
    const uint64_t hi = number(item.substr(dash + 1));
    if (hi < lo) throw DomainError("descending seed range in \"" +
                                   std::string(text) + "\"");
    for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw DomainError("empty seed list");
  return seeds;
}

void ResultTable::Write(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::kCsv) {
    for (size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << CsvField(CellText(row[i]));
      }
      out << '\n';
    }
    return;
  }
  ordered_json doc;
  doc["command"] = command;
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[columns[i]] = v; }, row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

ResultTable RunGates(const GatesConfig& config) {
  auto lattice = RedundancyLattice::Build(2);
  ResultTable table{"gates",
                    {"gate", "p", "antichain", "named", "partial", "residual"},
                    {}};
  for (double p : config.grid.Values()) {
    const Decomposition d = DecomposeMace(GateModel(config.gate, p), lattice);
    for (NodeId id = 0; id < lattice->size(); ++id) {
      table.rows.push_back({std::string(ToString(config.gate)), p,
                            Label(lattice->node(id)),
                            Label(lattice->node(id), kGateNames, ","),
                            d.partials[id], d.reconstruction_residual});
    }
  }
  return table;
}

ResultTable RunCa(const CaConfig& config) {
  if (config.priors.empty()) throw DomainError("no prior selected");
  if (config.seeds.empty()) throw DomainError("empty seed list");
  auto lattice = RedundancyLattice::Build(3);
  const InvertOptions options{.require_monotone = config.strict};

  struct PriorRuns {
    PriorKind kind;
    std::vector<Decomposition> runs;
    std::vector<uint64_t> seeds;  // empty for analytic priors
    int degenerate = 0;
  };
  std::vector<PriorRuns> all;
  for (PriorKind kind : config.priors) {
    PriorRuns pr{kind, {}, {}, 0};
    if (kind == PriorKind::kMaxEnt || kind == PriorKind::kZeros) {
      pr.runs.push_back(
          DecomposeMace(CaModel(config.rule, kind), lattice, options));
    } else {
      const Initialization init = kind == PriorKind::kRandomInit
                                      ? Initialization::kRandom
                                      : Initialization::kMiddleOne;
      for (uint64_t seed : config.seeds) {
        const CaPrior prior =
            EstimateCaPrior(config.rule, init, config.simulation, seed);
        if (prior.degenerate) ++pr.degenerate;
        pr.runs.push_back(DecomposeMace(
            CaModel(config.rule, kind, prior.joint), lattice, options));
        pr.seeds.push_back(seed);
      }
    }
    all.push_back(std::move(pr));
  }

  std::vector<bool> shown(lattice->size(), config.min_display <= 0.0);
  for (const PriorRuns& pr : all) {
    for (NodeId id = 0; id < lattice->size(); ++id) {
      if (config.per_seed) {
        for (const Decomposition& d : pr.runs) {
          if (std::abs(d.partials[id]) >= config.min_display) shown[id] = true;
        }
      } else if (std::abs(MeanStd(pr.runs, id).first) >= config.min_display) {
        shown[id] = true;
      }
    }
  }

  ResultTable table;
  table.command = "ca";
  const int64_t cells = config.simulation.cells;
  const int64_t steps = config.simulation.steps;
  const int64_t burn_in = config.simulation.burn_in;
  if (config.per_seed) {
    table.columns = {"rule",     "prior",    "seed",
                     "antichain", "named",   "partial",
                     "residual", "order_violations", "cells",
                     "steps",    "burn_in"};
    for (const PriorRuns& pr : all) {
      for (size_t r = 0; r < pr.runs.size(); ++r) {
        const std::string seed =
            pr.seeds.empty() ? "-" : std::to_string(pr.seeds[r]);
        for (NodeId id = 0; id < lattice->size(); ++id) {
          if (!shown[id]) continue;
          table.rows.push_back(
              {int64_t{config.rule}, std::string(ToString(pr.kind)), seed,
               Label(lattice->node(id)), Label(lattice->node(id), kCaNames),
               pr.runs[r].partials[id], pr.runs[r].reconstruction_residual,
               static_cast<int64_t>(pr.runs[r].order_violations), cells,
               steps, burn_in});
        }
      }
    }
    return table;
  }
  table.columns = {"rule",         "prior",  "antichain",
                   "named",        "mean",   "std",
                   "max_residual", "order_violations", "cells",
                   "steps",        "burn_in", "seeds",
                   "degenerate_seeds"};
  for (const PriorRuns& pr : all) {
    const double residual = MaxResidual(pr.runs);
    const int64_t violations = MaxViolations(pr.runs);
    const std::string seeds = pr.seeds.empty() ? "-" : JoinSeeds(pr.seeds);
    for (NodeId id = 0; id < lattice->size(); ++id) {
      if (!shown[id]) continue;
      auto [mean, sd] = MeanStd(pr.runs, id);
      table.rows.push_back({int64_t{config.rule},
                            std::string(ToString(pr.kind)),
                            Label(lattice->node(id)),
                            Label(lattice->node(id), kCaNames), mean, sd,
                            residual, violations, cells, steps, burn_in, seeds,
                            int64_t{pr.degenerate}});
    }
  }
  return table;
}

ResultTable RunChemical(const ChemicalConfig& config) {
  auto lattice = RedundancyLattice::Build(2);
  ResultTable table{"chemical",
                    {"k3", "antichain", "named", "partial", "residual"},
                    {}};
  for (double k3 : config.k3_grid.Values()) {
    ChemicalRates rates = config.rates;
    rates.k3 = k3;
    const Decomposition d = DecomposeMace(
        ChemicalModel(rates, config.x1, config.x2, config.epsilon), lattice);
    for (NodeId id = 0; id < lattice->size(); ++id) {
      table.rows.push_back({k3, Label(lattice->node(id)),
                            Label(lattice->node(id), kGateNames, ","),
                            d.partials[id], d.reconstruction_residual});
    }
  }
  return table;
}

ResultTable RunDecompose(std::string_view effects_json) {
  const ExternalEffects effects = LoadExternalEffects(effects_json);
  auto lattice =
      RedundancyLattice::Build(static_cast<int>(effects.variables.size()));
  ResultTable table{
      "decompose",
      {"context", "antichain", "named", "measure", "partial", "residual"},
      {}};
  for (const EffectContext& ctx : effects.contexts) {
    const MeasureTable measure =
        SignedRedundantMeasure(lattice, ctx.effects);
    const Decomposition d = Invert(measure);
    for (NodeId id = 0; id < lattice->size(); ++id) {
      table.rows.push_back(
          {ctx.label, Label(lattice->node(id)),
           Label(lattice->node(id), effects.variables, ","),
           measure.values[id], d.partials[id], d.reconstruction_residual});
    }
  }
  return table;
}

LatticeExport ParseLatticeExport(std::string_view text) {
  if (text == "dot") return LatticeExport::kDot;
  if (text == "table") return LatticeExport::kTable;
  if (text == "summary") return LatticeExport::kSummary;
  throw DomainError("unknown lattice export \"" + std::string(text) +
                    "\"; expected dot, table or summary");
}

std::string RunLattice(int n, LatticeExport what) {
  auto lattice = RedundancyLattice::Build(n);
  switch (what) {
    case LatticeExport::kDot:
      return ExportDot(*lattice);
    case LatticeExport::kTable:
      return ExportTable(*lattice);
    case LatticeExport::kSummary:
      break;
  }
  std::ostringstream out;
  out << "n,nodes,cover_edges\n"
      << n << ',' << lattice->size() << ',' << lattice->NumCoverEdges()
      << '\n';
  return out.str();
}

std::string RunCauses(std::string_view truth_table, std::string_view context,
                      OutputFormat format) {
  if (context.find_first_not_of("01") != std::string_view::npos) {
    throw DomainError("context must be a 0/1 string, X_0 first");
  }
  uint32_t ones = 0;
  for (size_t i = 0; i < context.size(); ++i) {
    if (context[i] == '1') ones |= 1u << i;
  }
  const ActualContext actual =
      ParseTruthTable(truth_table, VariableSet::FromBits(ones));
  if (!context.empty() &&
      static_cast<int>(context.size()) != actual.num_variables()) {
    throw DomainError("context width does not match the truth table");
  }
  const CauseReport report =
      DecomposeCauses(actual, RedundancyLattice::Build(actual.num_variables()));
  if (format == OutputFormat::kCsv) return FormatCauseReport(report);

  const RedundancyLattice& lattice = *report.decomposition.lattice;
  ordered_json doc;
  doc["command"] = "causes";
  doc["D"] = ordered_json::object();
  for (NodeId id = 0; id < lattice.size(); ++id) {
    doc["D"][Label(lattice.node(id))] = report.decomposition.partials[id];
  }
  doc["sufficient"] = ordered_json::array();
  for (const SufficientCause& c : report.sufficient) {
    doc["sufficient"].push_back(
        {{"antichain", Label(c.family)}, {"verified", c.verified}});
  }
  doc["necessary"] = ordered_json::array();
  for (VariableSet s : report.necessary) {
    doc["necessary"].push_back("{" + s.Digits() + "}");
  }
  doc["non_monotone"] = report.non_monotone;
  return doc.dump(2) + "\n";
}

}  // namespace causal_decomp::cli
