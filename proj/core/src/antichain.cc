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

#include "causal_decomp/antichain.h"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "causal_decomp/errors.h"

namespace causal_decomp {

VariableSet VariableSet::Of(std::initializer_list<int> indices) {
  uint32_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32) {
      throw DomainError("variable index " + std::to_string(i) +
                        " out of range");
    }
    bits |= 1u << i;
  }
  return FromBits(bits);
}

std::vector<int> VariableSet::Indices() const {
  std::vector<int> out;
  for (uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string VariableSet::Digits() const {
  std::string out;
  for (int i : Indices()) out += std::to_string(i);
  return out;
}

uint32_t Antichain::FamilyBits() const {
  uint32_t family = 0;
  for (VariableSet s : members_) family |= 1u << (s.bits() - 1);
  return family;
}

bool Antichain::HasSingletonMember() const {
  return std::any_of(members_.begin(), members_.end(),
                     [](VariableSet s) { return s.size() == 1; });
}

int Antichain::Extent() const {
  int extent = 0;
  for (VariableSet s : members_) extent = std::max(extent, s.Extent());
  return extent;
}

std::strong_ordering operator<=>(const Antichain& a, const Antichain& b) {
  const size_t common = std::min(a.members_.size(), b.members_.size());
  for (size_t i = 0; i < common; ++i) {
    if (a.members_[i] == b.members_[i]) continue;
    return CanonicalLess(a.members_[i], b.members_[i])
               ? std::strong_ordering::less
               : std::strong_ordering::greater;
  }
  return a.members_.size() <=> b.members_.size();
}

Antichain Canonicalize(std::span<const VariableSet> subsets) {
  if (subsets.empty()) {
    throw InvalidAntichainError("antichain must have at least one member");
  }
  std::vector<VariableSet> sorted(subsets.begin(), subsets.end());
  for (VariableSet s : sorted) {
    if (s.empty()) {
      throw InvalidAntichainError("antichain members must be non-empty");
    }
  }
  std::sort(sorted.begin(), sorted.end(), CanonicalLess);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Canonical order lists every subset before its strict supersets, so one
  // forward pass keeps exactly the minimal members.
  Antichain out;
  for (VariableSet s : sorted) {
    const bool dominated =
        std::any_of(out.members_.begin(), out.members_.end(),
                    [s](VariableSet kept) { return kept.IsSubsetOf(s); });
    if (!dominated) out.members_.push_back(s);
  }
  return out;
}

Antichain Canonicalize(std::initializer_list<VariableSet> subsets) {
  return Canonicalize(std::span<const VariableSet>(subsets.begin(),
                                                   subsets.size()));
}

Antichain AntichainFromCanonical(std::vector<VariableSet> members) {
#ifndef NDEBUG
  for (size_t i = 0; i < members.size(); ++i) {
    assert(!members[i].empty());
    if (i > 0) assert(CanonicalLess(members[i - 1], members[i]));
    for (size_t j = 0; j < i; ++j) {
      assert(!members[j].IsSubsetOf(members[i]));
    }
  }
#endif
  Antichain out;
  out.members_ = std::move(members);
  return out;
}

bool IsBelow(const Antichain& alpha, const Antichain& beta) {
  for (VariableSet b : beta.members()) {
    const bool covered =
        std::any_of(alpha.members().begin(), alpha.members().end(),
                    [b](VariableSet a) { return a.IsSubsetOf(b); });
    if (!covered) return false;
  }
  return true;
}

namespace {

std::string JoinLabel(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const std::string& p : parts) out += "{" + p + "}";
  return out;
}

}  // namespace

std::string Label(const Antichain& antichain) {
  std::vector<std::string> parts;
  for (VariableSet s : antichain.members()) parts.push_back(s.Digits());
  return JoinLabel(std::move(parts));
}

std::string Label(const Antichain& antichain,
                  std::span<const std::string> names,
                  std::string_view separator) {
  std::vector<std::string> parts;
  for (VariableSet s : antichain.members()) {
    std::string part;
    for (int i : s.Indices()) {
      if (!part.empty()) part += separator;
      part += static_cast<size_t>(i) < names.size() ? names[i]
                                                     : std::to_string(i);
    }
    parts.push_back(std::move(part));
  }
  return JoinLabel(std::move(parts));
}

Antichain ParseLabel(std::string_view label) {
  std::vector<VariableSet> members;
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("antichain label \"" + std::string(label) +
                     "\", offset " + std::to_string(pos) + ": " + what);
  };
  while (pos < label.size()) {
    if (label[pos] != '{') fail("expected '{'");
    ++pos;
    uint32_t bits = 0;
    while (pos < label.size() && label[pos] != '}') {
      const char c = label[pos];
      if (c < '0' || c >= '0' + kMaxVariables) fail("bad variable digit");
      bits |= 1u << (c - '0');
      ++pos;
    }
    if (pos == label.size()) fail("unterminated member");
    if (bits == 0) fail("empty member");
    members.push_back(VariableSet::FromBits(bits));
    ++pos;
  }
  if (members.empty()) fail("no members");
  return Canonicalize(members);
}

}  // namespace causal_decomp
