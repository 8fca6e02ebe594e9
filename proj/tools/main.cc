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

// Command-line front end: one subcommand per reproduced computation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "causal_decomp/errors.h"
#include "commands.h"

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw causal_decomp::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw causal_decomp::Error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = causal_decomp::cli;
  CLI::App app{"Partial causality decomposition over the antichain lattice"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  // gates
  std::string gate = "or";
  std::string gate_grid = "0.01:0.99:99";
  auto* gates = app.add_subcommand("gates", "decompose two-input logic gates");
  gates->add_option("--gate", gate, "or, and, xor, copy");
  gates->add_option("--grid", gate_grid, "p grid start:stop:points[:log]");
  add_io(gates);

  // ca
  int rule = 90;
  std::string prior = "maxent";
  cli::CaConfig ca_config;
  std::string seeds = "0-19";
  auto* ca = app.add_subcommand("ca", "decompose an elementary CA update");
  ca->add_option("--rule", rule, "Wolfram rule 0-255");
  ca->add_option("--prior", prior, "maxent, zeros, random, middle1 or all");
  ca->add_option("--cells", ca_config.simulation.cells, "cells");
  ca->add_option("--steps", ca_config.simulation.steps, "simulated steps");
  ca->add_option("--burn-in", ca_config.simulation.burn_in,
                 "states discarded before counting");
  ca->add_option("--seeds", seeds, "seed list, e.g. 0-19 or 1,2,3");
  ca->add_option("--min-display", ca_config.min_display,
                 "hide antichains below this |mean| under every prior");
  ca->add_flag("--per-seed", ca_config.per_seed, "one row per seed");
  ca->add_flag("--strict", ca_config.strict,
               "fail when the redundant MACE is not monotone");
  add_io(ca);

  // chemical
  cli::ChemicalConfig chem_config;
  std::string k3_grid = "0.01:1000:60:log";
  auto* chemical =
      app.add_subcommand("chemical", "decompose the two-species network");
  chemical->add_option("--k1", chem_config.rates.k1, "rate of X1 -> Y");
  chemical->add_option("--k2", chem_config.rates.k2, "rate of X2 -> Y");
  chemical->add_option("--x1", chem_config.x1, "baseline [X1]");
  chemical->add_option("--x2", chem_config.x2, "baseline [X2]");
  chemical->add_option("--epsilon", chem_config.epsilon, "perturbation size");
  chemical->add_option("--grid", k3_grid, "k3 grid start:stop:points[:log]");
  add_io(chemical);

  // decompose
  std::string effects_path;
  auto* decompose = app.add_subcommand(
      "decompose", "decompose signed effects from an external-effects file");
  decompose->add_option("effects", effects_path, "JSON effects document")
      ->required();
  add_io(decompose);

  // lattice
  int n = 3;
  std::string export_kind = "dot";
  auto* lattice = app.add_subcommand("lattice", "export the redundancy lattice");
  lattice->add_option("--n", n, "number of variables (1-5)");
  lattice->add_option("--export", export_kind, "dot, table or summary");
  lattice->add_option("--out", out_path, "output file (default stdout)");

  // causes
  std::string table_path;
  std::string context;
  auto* causes = app.add_subcommand(
      "causes", "sufficient and necessary causes from a truth table");
  causes->add_option("--table", table_path, "truth table file")->required();
  causes->add_option("--context", context,
                     "actual values as a 0/1 string, X0 first (default zeros)");
  add_io(causes);

  CLI11_PARSE(app, argc, argv);

  try {
    const cli::OutputFormat fmt = cli::ParseOutputFormat(format);
    std::ostringstream out;
    if (gates->parsed()) {
      cli::GatesConfig config;
      config.gate = causal_decomp::ParseGate(gate);
      config.grid = cli::ParseGrid(gate_grid);
      cli::RunGates(config).Write(out, fmt);
    } else if (ca->parsed()) {
      ca_config.rule = rule;
      ca_config.seeds = cli::ParseSeeds(seeds);
      if (prior == "all") {
        ca_config.priors = {causal_decomp::PriorKind::kMaxEnt,
                            causal_decomp::PriorKind::kZeros,
                            causal_decomp::PriorKind::kRandomInit,
                            causal_decomp::PriorKind::kMiddleOne};
      } else {
        ca_config.priors = {causal_decomp::ParsePriorKind(prior)};
      }
      if (rule < 0 || rule > 255) {
        throw causal_decomp::DomainError("rule must be in 0..255");
      }
      cli::RunCa(ca_config).Write(out, fmt);
    } else if (chemical->parsed()) {
      chem_config.k3_grid = cli::ParseGrid(k3_grid, /*default_log=*/true);
      cli::RunChemical(chem_config).Write(out, fmt);
    } else if (decompose->parsed()) {
      cli::RunDecompose(ReadFile(effects_path)).Write(out, fmt);
    } else if (lattice->parsed()) {
      out << cli::RunLattice(n, cli::ParseLatticeExport(export_kind));
    } else if (causes->parsed()) {
      out << cli::RunCauses(ReadFile(table_path), context, fmt);
    }
    Emit(out.str(), out_path);
  } catch (const causal_decomp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
