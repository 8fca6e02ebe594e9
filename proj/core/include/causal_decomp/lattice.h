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

#ifndef CAUSAL_DECOMP_LATTICE_H_
#define CAUSAL_DECOMP_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "causal_decomp/antichain.h"

namespace causal_decomp {

using NodeId = uint32_t;

struct MobiusEntry {
  NodeId node;
  int64_t value;
};

// The redundancy lattice: every antichain of non-empty subsets of
// {0, ..., n-1}, ordered by IsBelow.
//
// Nodes are numbered in a linear extension of the order: the node count of
// each up-set decreases with the id, ties broken by the canonical antichain
// order. Node 0 is the bottom {{0},{1},...}; the last node is the top
// {{0,...,n-1}}.
//
// Immutable after Build() apart from the Möbius cache, whose columns are
// filled at most once each under std::call_once. All member functions are
// safe to call concurrently.
class RedundancyLattice {
 public:
  // Throws CapacityError unless 1 <= n <= kMaxVariables.
  static std::shared_ptr<const RedundancyLattice> Build(int n);

  RedundancyLattice(const RedundancyLattice&) = delete;
  RedundancyLattice& operator=(const RedundancyLattice&) = delete;

  int num_variables() const { return n_; }
  size_t size() const { return nodes_.size(); }
  NodeId bottom() const { return 0; }
  NodeId top() const { return static_cast<NodeId>(nodes_.size() - 1); }

  const Antichain& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Antichain>& nodes() const { return nodes_; }

  std::optional<NodeId> Find(const Antichain& antichain) const;
  // Throws LookupError when the antichain is not a node of this lattice.
  NodeId IndexOf(const Antichain& antichain) const;

  // Bit (s - 1) set for every subset s that contains a member of the node.
  uint32_t UpSet(NodeId id) const { return up_sets_[id]; }

  bool IsBelow(NodeId alpha, NodeId beta) const {
    return (families_[beta] & ~up_sets_[alpha]) == 0;
  }

  // Cover relation (transitive reduction), sorted ascending.
  std::span<const NodeId> LowerCovers(NodeId id) const {
    return lower_covers_[id];
  }
  std::span<const NodeId> UpperCovers(NodeId id) const {
    return upper_covers_[id];
  }
  size_t NumCoverEdges() const { return num_cover_edges_; }

  // Nodes below or equal to `id`, ascending.
  std::vector<NodeId> DownSet(NodeId id) const;

  // Möbius function of the redundancy order. Zero unless alpha <= beta.
  int64_t Mobius(NodeId alpha, NodeId beta) const;
  // Throws LookupError for antichains outside the lattice.
  int64_t Mobius(const Antichain& alpha, const Antichain& beta) const;

  // Non-zero values of mu(., beta), ascending by node.
  std::span<const MobiusEntry> MobiusColumn(NodeId beta) const;

 private:
  explicit RedundancyLattice(int n);

  void ComputeMobiusColumn(NodeId beta) const;

  int n_;
  std::vector<Antichain> nodes_;
  std::vector<uint32_t> families_;
  std::vector<uint32_t> up_sets_;
  std::unordered_map<uint32_t, NodeId> by_family_;
  std::vector<std::vector<NodeId>> lower_covers_;
  std::vector<std::vector<NodeId>> upper_covers_;
  size_t num_cover_edges_ = 0;

  mutable std::unique_ptr<std::once_flag[]> column_once_;
  mutable std::vector<std::vector<MobiusEntry>> mobius_columns_;
};

// Number of antichains of the n-element boolean lattice, minus the two
// families ({} and {{}}) that never appear as lattice nodes.
size_t ExpectedLatticeSize(int n);

// f(beta) = sum over alpha <= beta of g(alpha).
template <typename T>
std::vector<T> ZetaTransform(const RedundancyLattice& lattice,
                             std::span<const T> g) {
  std::vector<T> f(lattice.size(), T{});
  for (NodeId beta = 0; beta < lattice.size(); ++beta) {
    T acc{};
    for (NodeId alpha = 0; alpha <= beta; ++alpha) {
      if (lattice.IsBelow(alpha, beta)) acc += g[alpha];
    }
    f[beta] = acc;
  }
  return f;
}

// g(beta) = sum over alpha <= beta of mu(alpha, beta) f(alpha), summed in
// ascending node order.
template <typename T>
std::vector<T> MobiusTransform(const RedundancyLattice& lattice,
                               std::span<const T> f) {
  std::vector<T> g(lattice.size(), T{});
  for (NodeId beta = 0; beta < lattice.size(); ++beta) {
    T acc{};
    for (const MobiusEntry& e : lattice.MobiusColumn(beta)) {
      acc += static_cast<T>(e.value) * f[e.node];
    }
    g[beta] = acc;
  }
  return g;
}

// Hasse diagram in DOT syntax, edges pointing from a node to its covers.
std::string ExportDot(const RedundancyLattice& lattice);

// Tab-separated dump: node id, label, ids of the nodes it covers.
std::string ExportTable(const RedundancyLattice& lattice);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_LATTICE_H_
