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

#ifndef CAUSAL_DECOMP_ANTICHAIN_H_
#define CAUSAL_DECOMP_ANTICHAIN_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace causal_decomp {

// Largest number of variables a redundancy lattice may range over. The
// antichain count grows with the Dedekind numbers, so n = 6 (7828352
// antichains) is already out of reach for explicit enumeration.
inline constexpr int kMaxVariables = 5;

// A subset of variable indices {0, ..., n-1}, stored as a bit pattern with
// bit i set iff variable i is a member.
class VariableSet {
 public:
  constexpr VariableSet() = default;

  static constexpr VariableSet FromBits(uint32_t bits) {
    VariableSet s;
    s.bits_ = bits;
    return s;
  }
  static VariableSet Of(std::initializer_list<int> indices);
  static constexpr VariableSet Full(int n) {
    return FromBits(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool Contains(int index) const { return (bits_ >> index) & 1u; }
  constexpr bool IsSubsetOf(VariableSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Highest member index plus one; 0 for the empty set.
  constexpr int Extent() const { return 32 - std::countl_zero(bits_); }

  // Member indices in ascending order.
  std::vector<int> Indices() const;

  // Digits of the members in ascending order, e.g. "013".
  std::string Digits() const;

  friend constexpr bool operator==(VariableSet, VariableSet) = default;

 private:
  uint32_t bits_ = 0;
};

// Canonical order on subsets: by cardinality, then by bit pattern.
constexpr bool CanonicalLess(VariableSet a, VariableSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

// A family of pairwise ⊆-incomparable, non-empty variable subsets kept in
// canonical order, so that equality is structural.
class Antichain {
 public:
  Antichain() = default;

  const std::vector<VariableSet>& members() const { return members_; }
  size_t size() const { return members_.size(); }

  // Bit (s - 1) is set for every member s. Members are non-empty and
  // n <= 5, so every family fits in 31 bits.
  uint32_t FamilyBits() const;

  // True iff some member has exactly one variable.
  bool HasSingletonMember() const;

  // Smallest n this antichain can live in.
  int Extent() const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  // Lexicographic over members under CanonicalLess.
  friend std::strong_ordering operator<=>(const Antichain& a,
                                          const Antichain& b);

 private:
  friend Antichain Canonicalize(std::span<const VariableSet> subsets);
  friend Antichain AntichainFromCanonical(std::vector<VariableSet> members);

  std::vector<VariableSet> members_;
};

// Reduces a family of subsets to its ⊆-minimal members, deduplicated and in
// canonical order. Throws InvalidAntichainError for an empty family or an
// empty member.
Antichain Canonicalize(std::span<const VariableSet> subsets);
Antichain Canonicalize(std::initializer_list<VariableSet> subsets);

// Wraps members that are already canonical and pairwise incomparable.
// Checked in debug builds only.
Antichain AntichainFromCanonical(std::vector<VariableSet> members);

// Redundancy order: alpha <= beta iff every member of beta contains some
// member of alpha.
bool IsBelow(const Antichain& alpha, const Antichain& beta);

// Text label of the form "{01}{2}": each member's digits in braces, members
// sorted lexicographically by their digit strings.
std::string Label(const Antichain& antichain);

// Same, with variable names inside the braces joined by `separator`, e.g.
// "{AC}" for names {"A", "B", "C"} or "{not,bad}" with separator ",".
std::string Label(const Antichain& antichain,
                  std::span<const std::string> names,
                  std::string_view separator = "");

// Parses a digit label back into a canonical antichain. Throws ParseError.
Antichain ParseLabel(std::string_view label);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_ANTICHAIN_H_
