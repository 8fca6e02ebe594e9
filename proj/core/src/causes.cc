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

#include "causal_decomp/causes.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "causal_decomp/errors.h"
#include "causal_decomp/text_format.h"

namespace causal_decomp {

ActualContext::ActualContext(int n, VariableSet actual_ones,
                             std::vector<double> outcome)
    : n_(n), actual_(actual_ones), outcome_(std::move(outcome)) {
  if (n < 1 || n > kMaxVariables) {
    throw DomainError("context needs 1.." + std::to_string(kMaxVariables) +
                      " variables");
  }
  if (outcome_.size() != (size_t{1} << n)) {
    throw DomainError("outcome table must have 2^n entries");
  }
  if (!actual_ones.IsSubsetOf(VariableSet::Full(n))) {
    throw DomainError("actual values refer to unknown variables");
  }
}

ActualContext ActualContext::FromFunction(
    int n, VariableSet actual_ones, const std::function<double(uint32_t)>& y) {
  std::vector<double> outcome(size_t{1} << n);
  for (uint32_t x = 0; x < outcome.size(); ++x) outcome[x] = y(x);
  return ActualContext(n, actual_ones, std::move(outcome));
}

bool ActualContext::binary() const {
  return std::all_of(outcome_.begin(), outcome_.end(),
                     [](double y) { return y == 0.0 || y == 1.0; });
}

ActualContext ParseTruthTable(std::string_view text, VariableSet actual_ones) {
  std::vector<std::pair<uint32_t, double>> rows;
  int n = -1;
  size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [&](const std::string& what) {
    throw ParseError("truth table line " + std::to_string(line_no) + ": " +
                     what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string bits;
    std::string value;
    if (!(fields >> bits)) continue;
    if (!(fields >> value)) fail("expected \"bits outcome\"");
    std::string extra;
    if (fields >> extra) fail("trailing field \"" + extra + "\"");
    if (bits.find_first_not_of("01") != std::string::npos) {
      fail("assignment \"" + bits + "\" must be a 0/1 string");
    }
    if (n < 0) n = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != n) fail("inconsistent width");
    if (n < 1 || n > kMaxVariables) fail("unsupported number of variables");
    uint32_t x = 0;
    for (int i = 0; i < n; ++i) {
      if (bits[i] == '1') x |= 1u << i;
    }
    std::optional<double> y = ParseDouble(value);
    if (!y) fail("malformed outcome \"" + value + "\"");
    rows.emplace_back(x, *y);
  }
  if (n < 0) throw ParseError("truth table is empty");
  std::vector<double> outcome(size_t{1} << n, 0.0);
  std::vector<bool> seen(outcome.size(), false);
  for (const auto& [x, y] : rows) {
    if (seen[x]) throw ParseError("truth table repeats an assignment");
    seen[x] = true;
    outcome[x] = y;
  }
  if (rows.size() != outcome.size()) {
    throw ParseError("truth table needs " + std::to_string(outcome.size()) +
                     " rows, got " + std::to_string(rows.size()));
  }
  if (actual_ones.Extent() > n) {
    throw ParseError("context has more variables than the truth table");
  }
  return ActualContext(n, actual_ones, std::move(outcome));
}

double YCap(const ActualContext& context, const Antichain& alpha) {
  double value = context.ForcedOutcome(alpha.members().front());
  for (VariableSet a : alpha.members()) {
    value = std::min(value, context.ForcedOutcome(a));
  }
  return value;
}

MeasureTable CounterfactualMeasure(
    const ActualContext& context,
    std::shared_ptr<const RedundancyLattice> lattice) {
  if (lattice->num_variables() != context.num_variables()) {
    throw DomainError("lattice and context disagree on the number of "
                      "variables");
  }
  MeasureTable table{lattice, std::vector<double>(lattice->size()),
                     MeasureKind::kCounterfactualYCap};
  for (NodeId id = 0; id < lattice->size(); ++id) {
    table.values[id] = YCap(context, lattice->node(id));
  }
  return table;
}

CauseReport DecomposeCauses(const ActualContext& context,
                            std::shared_ptr<const RedundancyLattice> lattice) {
  if (!context.binary()) {
    throw DomainError("cause extraction needs a binary outcome");
  }
  MeasureTable measure = CounterfactualMeasure(context, lattice);
  CauseReport report;
  report.non_monotone = !CheckMonotone(measure).empty();
  report.decomposition = Invert(measure);

  std::optional<VariableSet> common;
  for (NodeId id = 0; id < lattice->size(); ++id) {
    if (std::abs(report.decomposition.partials[id] - 1.0) >
        kPartialTolerance) {
      continue;
    }
    SufficientCause cause{id, lattice->node(id), true};
    for (VariableSet conjunction : cause.family.members()) {
      if (context.ForcedOutcome(conjunction) != 1.0) cause.verified = false;
      common = VariableSet::FromBits(
          (common ? common->bits() : conjunction.bits()) & conjunction.bits());
    }
    report.sufficient.push_back(std::move(cause));
  }
  if (common && !common->empty()) report.necessary.push_back(*common);
  return report;
}

CauseReport ContextualShift(const ActualContext& context,
                            std::shared_ptr<const RedundancyLattice> lattice) {
  return DecomposeCauses(context, std::move(lattice));
}

std::string FormatCauseReport(const CauseReport& report) {
  std::ostringstream out;
  const RedundancyLattice& lattice = *report.decomposition.lattice;
  out << "antichain,D\n";
  for (NodeId id = 0; id < lattice.size(); ++id) {
    out << Label(lattice.node(id)) << ','
        << FormatDouble(report.decomposition.partials[id]) << '\n';
  }
  out << "\nsufficient causes:";
  if (report.sufficient.empty()) out << " none";
  out << '\n';
  for (const SufficientCause& c : report.sufficient) {
    out << "  " << Label(c.family) << " (";
    for (size_t i = 0; i < c.family.members().size(); ++i) {
      if (i > 0) out << " or ";
      const std::vector<int> idx = c.family.members()[i].Indices();
      for (size_t j = 0; j < idx.size(); ++j) {
        if (j > 0) out << " and ";
        out << 'X' << idx[j];
      }
    }
    out << ")" << (c.verified ? "" : " [not verified]") << '\n';
  }
  out << "necessary causes:";
  if (report.necessary.empty()) out << " none";
  for (VariableSet s : report.necessary) out << " {" << s.Digits() << "}";
  out << '\n';
  if (report.non_monotone) {
    out << "warning: Y_cap is not monotone; D values are reported raw\n";
  }
  return out.str();
}

}  // namespace causal_decomp
