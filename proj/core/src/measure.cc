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

#include "causal_decomp/measure.h"

#include <algorithm>
#include <string>
#include <utility>

#include "causal_decomp/errors.h"
#include "causal_decomp/text_format.h"

namespace causal_decomp {

std::string_view ToString(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kMaceCap:
      return "mace_cap";
    case MeasureKind::kSignedCeCap:
      return "signed_ce_cap";
    case MeasureKind::kCounterfactualYCap:
      return "counterfactual_y_cap";
  }
  return "unknown";
}

MeasureKind ParseMeasureKind(std::string_view text) {
  for (MeasureKind kind :
       {MeasureKind::kMaceCap, MeasureKind::kSignedCeCap,
        MeasureKind::kCounterfactualYCap}) {
    if (text == ToString(kind)) return kind;
  }
  throw ParseError("unknown measure kind \"" + std::string(text) + "\"");
}

SubsetTable::SubsetTable(int num_variables) : n_(num_variables) {
  if (n_ < 1 || n_ > kMaxVariables) {
    throw CapacityError("subset table over " + std::to_string(n_) +
                        " variables; supported range is 1.." +
                        std::to_string(kMaxVariables));
  }
  values_.resize(size_t{1} << n_);
}

void SubsetTable::CheckSubset(VariableSet subset) const {
  if (subset.empty() || !subset.IsSubsetOf(VariableSet::Full(n_))) {
    throw DomainError("subset {" + subset.Digits() +
                      "} is not a non-empty subset of " +
                      std::to_string(n_) + " variables");
  }
}

void SubsetTable::Set(VariableSet subset, double value) {
  CheckSubset(subset);
  values_[subset.bits()] = value;
}

std::optional<double> SubsetTable::Get(VariableSet subset) const {
  CheckSubset(subset);
  return values_[subset.bits()];
}

double SubsetTable::at(VariableSet subset) const {
  std::optional<double> v = Get(subset);
  if (!v) {
    throw IncompleteMeasureError("no value for subset {" + subset.Digits() +
                                 "}");
  }
  return *v;
}

std::vector<VariableSet> SubsetTable::Missing() const {
  std::vector<VariableSet> missing;
  for (uint32_t bits = 1; bits < values_.size(); ++bits) {
    if (!values_[bits]) missing.push_back(VariableSet::FromBits(bits));
  }
  std::sort(missing.begin(), missing.end(), CanonicalLess);
  return missing;
}

namespace {

void RequireComplete(const RedundancyLattice& lattice,
                     const SubsetTable& table) {
  if (table.num_variables() != lattice.num_variables()) {
    throw DomainError("subset table has " +
                      std::to_string(table.num_variables()) +
                      " variables but the lattice has " +
                      std::to_string(lattice.num_variables()));
  }
  std::vector<VariableSet> missing = table.Missing();
  if (!missing.empty()) {
    throw IncompleteMeasureError(
        "subset measure is missing " + std::to_string(missing.size()) +
        " value(s), first {" + missing.front().Digits() + "}");
  }
}

}  // namespace

MeasureTable RedundantMeasure(std::shared_ptr<const RedundancyLattice> lattice,
                              const SubsetTable& subset_measure) {
  RequireComplete(*lattice, subset_measure);
  for (uint32_t bits = 1; bits < (1u << lattice->num_variables()); ++bits) {
    const VariableSet s = VariableSet::FromBits(bits);
    if (subset_measure.at(s) < 0.0) {
      throw DomainError("subset {" + s.Digits() +
                        "} has a negative value; use SignedRedundantMeasure "
                        "for signed effects");
    }
  }
  MeasureTable table{lattice, std::vector<double>(lattice->size()),
                     MeasureKind::kMaceCap};
  for (NodeId id = 0; id < lattice->size(); ++id) {
    const auto& members = lattice->node(id).members();
    double value = subset_measure.at(members.front());
    for (VariableSet s : members) value = std::min(value, subset_measure.at(s));
    table.values[id] = value;
  }
  return table;
}

MeasureTable SignedRedundantMeasure(
    std::shared_ptr<const RedundancyLattice> lattice,
    const SubsetTable& subset_effect) {
  RequireComplete(*lattice, subset_effect);
  MeasureTable table{lattice, std::vector<double>(lattice->size()),
                     MeasureKind::kSignedCeCap};
  for (NodeId id = 0; id < lattice->size(); ++id) {
    bool all_positive = true;
    bool all_negative = true;
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (VariableSet s : lattice->node(id).members()) {
      const double e = subset_effect.at(s);
      all_positive = all_positive && e > 0.0;
      all_negative = all_negative && e < 0.0;
      lo = first ? e : std::min(lo, e);
      hi = first ? e : std::max(hi, e);
      first = false;
    }
    table.values[id] = all_positive ? lo : (all_negative ? hi : 0.0);
  }
  return table;
}

std::vector<OrderViolation> CheckMonotone(const MeasureTable& measure,
                                          double slack) {
  std::vector<OrderViolation> violations;
  const RedundancyLattice& lattice = *measure.lattice;
  for (NodeId upper = 0; upper < lattice.size(); ++upper) {
    for (NodeId lower : lattice.LowerCovers(upper)) {
      if (measure.values[lower] > measure.values[upper] + slack) {
        violations.push_back({lower, upper, measure.values[lower],
                              measure.values[upper]});
      }
    }
  }
  return violations;
}

void WriteMeasureCsv(std::ostream& out, const MeasureTable& measure) {
  out << "antichain,value,kind\n";
  for (NodeId id = 0; id < measure.lattice->size(); ++id) {
    out << Label(measure.lattice->node(id)) << ','
        << FormatDouble(measure.values[id]) << ',' << ToString(measure.kind)
        << '\n';
  }
}

MeasureTable ReadMeasureCsv(std::istream& in,
                            std::shared_ptr<const RedundancyLattice> lattice) {
  std::string line;
  size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("measure table line " + std::to_string(line_no) + ": " +
                     what);
  };
  if (!std::getline(in, line)) {
    ++line_no;
    fail("missing header");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "antichain,value,kind") fail("unexpected header \"" + line + "\"");

  MeasureTable table{lattice, std::vector<double>(lattice->size(), 0.0),
                     MeasureKind::kMaceCap};
  std::vector<bool> seen(lattice->size(), false);
  std::optional<MeasureKind> kind;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields = SplitFields(line, ',');
    if (fields.size() != 3) fail("expected 3 fields");
    Antichain a;
    try {
      a = ParseLabel(fields[0]);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    std::optional<NodeId> id = lattice->Find(a);
    if (!id) fail("antichain " + std::string(fields[0]) + " not in lattice");
    if (seen[*id]) fail("duplicate antichain " + std::string(fields[0]));
    std::optional<double> value = ParseDouble(fields[1]);
    if (!value) fail("malformed number \"" + std::string(fields[1]) + "\"");
    MeasureKind row_kind = MeasureKind::kMaceCap;
    try {
      row_kind = ParseMeasureKind(fields[2]);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (kind && *kind != row_kind) fail("mixed measure kinds");
    kind = row_kind;
    seen[*id] = true;
    table.values[*id] = *value;
  }
  for (NodeId id = 0; id < lattice->size(); ++id) {
    if (!seen[id]) {
      throw IncompleteMeasureError("measure table has no row for " +
                                   Label(lattice->node(id)));
    }
  }
  table.kind = *kind;
  return table;
}

}  // namespace causal_decomp
