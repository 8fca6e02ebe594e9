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

#include "causal_decomp/lattice.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>
#include <utility>

#include "causal_decomp/errors.h"

namespace causal_decomp {
namespace {

// Non-empty subsets of {0..n-1} in canonical order.
std::vector<VariableSet> CanonicalSubsets(int n) {
  std::vector<VariableSet> subsets;
  for (uint32_t bits = 1; bits < (1u << n); ++bits) {
    subsets.push_back(VariableSet::FromBits(bits));
  }
  std::sort(subsets.begin(), subsets.end(), CanonicalLess);
  return subsets;
}

// Extends `chosen` with subsets after position `next`, keeping every member
// incomparable with the ones already chosen. Since subsets are visited in
// canonical order, a later subset can only be a superset of an earlier one.
void ExtendAntichains(const std::vector<VariableSet>& subsets, size_t next,
                      std::vector<VariableSet>& chosen,
                      std::vector<Antichain>& out) {
  for (size_t i = next; i < subsets.size(); ++i) {
    const VariableSet s = subsets[i];
    const bool comparable =
        std::any_of(chosen.begin(), chosen.end(),
                    [s](VariableSet c) { return c.IsSubsetOf(s); });
    if (comparable) continue;
    chosen.push_back(s);
    out.push_back(AntichainFromCanonical(chosen));
    ExtendAntichains(subsets, i + 1, chosen, out);
    chosen.pop_back();
  }
}

// Bit (t - 1) for every non-empty t ⊇ s.
uint32_t SupersetBits(int n, VariableSet s) {
  uint32_t up = 0;
  for (uint32_t t = 1; t < (1u << n); ++t) {
    if (s.IsSubsetOf(VariableSet::FromBits(t))) up |= 1u << (t - 1);
  }
  return up;
}

}  // namespace

size_t ExpectedLatticeSize(int n) {
  static constexpr size_t kDedekind[] = {2, 3, 6, 20, 168, 7581};
  if (n < 1 || n > kMaxVariables) {
    throw CapacityError("no lattice size on record for n = " +
                        std::to_string(n));
  }
  return kDedekind[n] - 2;
}

std::shared_ptr<const RedundancyLattice> RedundancyLattice::Build(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw CapacityError(
        "redundancy lattice over n = " + std::to_string(n) +
        " variables requested; supported range is 1.." +
        std::to_string(kMaxVariables) +
        " because the antichain count grows as the Dedekind numbers");
  }
  return std::shared_ptr<const RedundancyLattice>(new RedundancyLattice(n));
}

RedundancyLattice::RedundancyLattice(int n) : n_(n) {
  const std::vector<VariableSet> subsets = CanonicalSubsets(n);
  std::vector<uint32_t> superset_bits(1u << n, 0);
  for (VariableSet s : subsets) superset_bits[s.bits()] = SupersetBits(n, s);

  std::vector<Antichain> antichains;
  std::vector<VariableSet> chosen;
  ExtendAntichains(subsets, 0, chosen, antichains);

  auto up_set_of = [&](const Antichain& a) {
    uint32_t up = 0;
    for (VariableSet s : a.members()) up |= superset_bits[s.bits()];
    return up;
  };

  // Larger up-set means lower in the order.
  std::vector<std::pair<uint32_t, Antichain>> keyed;
  keyed.reserve(antichains.size());
  for (Antichain& a : antichains) {
    const uint32_t up = up_set_of(a);
    keyed.emplace_back(up, std::move(a));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    const int cx = std::popcount(x.first);
    const int cy = std::popcount(y.first);
    if (cx != cy) return cx > cy;
    return x.second < y.second;
  });

  nodes_.reserve(keyed.size());
  for (auto& [up, a] : keyed) {
    families_.push_back(a.FamilyBits());
    up_sets_.push_back(up);
    nodes_.push_back(std::move(a));
  }

  std::unordered_map<uint32_t, NodeId> by_up_set;
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    by_family_.emplace(families_[id], id);
    by_up_set.emplace(up_sets_[id], id);
  }

  // Up-sets of the subset lattice, ordered by reverse inclusion, form a
  // distributive lattice isomorphic to this one. alpha is covered by beta
  // iff up(alpha) is up(beta) plus one subset whose strict supersets all
  // lie in up(beta).
  lower_covers_.resize(nodes_.size());
  upper_covers_.resize(nodes_.size());
  for (NodeId beta = 0; beta < nodes_.size(); ++beta) {
    const uint32_t up = up_sets_[beta];
    for (VariableSet s : subsets) {
      const uint32_t bit = 1u << (s.bits() - 1);
      if (up & bit) continue;
      const uint32_t strict_supersets = superset_bits[s.bits()] & ~bit;
      if ((strict_supersets & ~up) != 0) continue;
      const NodeId alpha = by_up_set.at(up | bit);
      lower_covers_[beta].push_back(alpha);
      upper_covers_[alpha].push_back(beta);
      ++num_cover_edges_;
    }
  }
  for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
  for (auto& v : upper_covers_) std::sort(v.begin(), v.end());

  column_once_ = std::make_unique<std::once_flag[]>(nodes_.size());
  mobius_columns_.resize(nodes_.size());
  // Small lattices get the whole table up front; n = 5 fills lazily.
  if (n_ <= 4) {
    for (NodeId beta = 0; beta < nodes_.size(); ++beta) MobiusColumn(beta);
  }
}

std::optional<NodeId> RedundancyLattice::Find(const Antichain& antichain) const {
  if (antichain.size() == 0 || antichain.Extent() > n_) return std::nullopt;
  auto it = by_family_.find(antichain.FamilyBits());
  if (it == by_family_.end()) return std::nullopt;
  return it->second;
}

NodeId RedundancyLattice::IndexOf(const Antichain& antichain) const {
  std::optional<NodeId> id = Find(antichain);
  if (!id) {
    throw LookupError("antichain " + Label(antichain) +
                      " is not a node of the n = " + std::to_string(n_) +
                      " redundancy lattice");
  }
  return *id;
}

std::vector<NodeId> RedundancyLattice::DownSet(NodeId id) const {
  std::vector<NodeId> out;
  for (NodeId alpha = 0; alpha <= id; ++alpha) {
    if (IsBelow(alpha, id)) out.push_back(alpha);
  }
  return out;
}

void RedundancyLattice::ComputeMobiusColumn(NodeId beta) const {
  // mu(beta, beta) = 1 and mu(z, beta) = -sum_{z < w <= beta} mu(w, beta),
  // walking the down-set of beta from the top. Only non-zero terms are
  // kept, which makes the inner sum cheap.
  std::vector<MobiusEntry> nonzero;
  nonzero.push_back({beta, 1});
  for (NodeId z = beta; z-- > 0;) {
    if (!IsBelow(z, beta)) continue;
    int64_t sum = 0;
    for (const MobiusEntry& w : nonzero) {
      if (IsBelow(z, w.node)) sum += w.value;
    }
    if (sum != 0) nonzero.push_back({z, -sum});
  }
  std::reverse(nonzero.begin(), nonzero.end());
  mobius_columns_[beta] = std::move(nonzero);
}

std::span<const MobiusEntry> RedundancyLattice::MobiusColumn(
    NodeId beta) const {
  if (beta >= nodes_.size()) {
    throw LookupError("node id " + std::to_string(beta) + " out of range");
  }
  std::call_once(column_once_[beta], [&] { ComputeMobiusColumn(beta); });
  return mobius_columns_[beta];
}

int64_t RedundancyLattice::Mobius(NodeId alpha, NodeId beta) const {
  if (alpha >= nodes_.size() || beta >= nodes_.size()) {
    throw LookupError("node id out of range");
  }
  if (!IsBelow(alpha, beta)) return 0;
  std::span<const MobiusEntry> column = MobiusColumn(beta);
  auto it = std::lower_bound(
      column.begin(), column.end(), alpha,
      [](const MobiusEntry& e, NodeId id) { return e.node < id; });
  return (it != column.end() && it->node == alpha) ? it->value : 0;
}

int64_t RedundancyLattice::Mobius(const Antichain& alpha,
                                  const Antichain& beta) const {
  return Mobius(IndexOf(alpha), IndexOf(beta));
}

std::string ExportDot(const RedundancyLattice& lattice) {
  std::ostringstream out;
  out << "digraph redundancy_lattice_n" << lattice.num_variables() << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (NodeId id = 0; id < lattice.size(); ++id) {
    out << "  n" << id << " [label=\"" << Label(lattice.node(id)) << "\"];\n";
  }
  for (NodeId id = 0; id < lattice.size(); ++id) {
    for (NodeId up : lattice.UpperCovers(id)) {
      out << "  n" << id << " -> n" << up << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string ExportTable(const RedundancyLattice& lattice) {
  std::ostringstream out;
  out << "id\tlabel\tlower_covers\n";
  for (NodeId id = 0; id < lattice.size(); ++id) {
    out << id << '\t' << Label(lattice.node(id)) << '\t';
    std::span<const NodeId> covers = lattice.LowerCovers(id);
    for (size_t i = 0; i < covers.size(); ++i) {
      if (i > 0) out << ',';
      out << covers[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace causal_decomp
