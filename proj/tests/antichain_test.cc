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

#include <random>
#include <vector>

#include "causal_decomp/errors.h"
#include "gtest/gtest.h"

namespace causal_decomp {
namespace {

VariableSet S(std::initializer_list<int> idx) { return VariableSet::Of(idx); }

TEST(CanonicalizeTest, DropsComparableSuperset) {
  const Antichain a = Canonicalize({S({0, 1}), S({0, 1, 2})});
  EXPECT_EQ(a.members(), std::vector<VariableSet>{S({0, 1})});
}

TEST(CanonicalizeTest, KeepsAntichain) {
  const Antichain a = Canonicalize({S({0}), S({1})});
  EXPECT_EQ(a.members(), (std::vector<VariableSet>{S({0}), S({1})}));
}

TEST(CanonicalizeTest, DeduplicatesAndSorts) {
  const Antichain a = Canonicalize({S({1}), S({0}), S({1})});
  EXPECT_EQ(a.members(), (std::vector<VariableSet>{S({0}), S({1})}));
}

TEST(CanonicalizeTest, OrdersByCardinalityThenBits) {
  const Antichain a = Canonicalize({S({0, 1}), S({2})});
  EXPECT_EQ(a.members(), (std::vector<VariableSet>{S({2}), S({0, 1})}));
}

TEST(CanonicalizeTest, RejectsEmptyFamilyAndEmptyMember) {
  std::vector<VariableSet> none;
  EXPECT_THROW(Canonicalize(none), InvalidAntichainError);
  EXPECT_THROW(Canonicalize({S({0}), VariableSet()}), InvalidAntichainError);
}

TEST(CanonicalizeTest, IdempotentOnRandomFamilies) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<VariableSet> family;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      family.push_back(VariableSet::FromBits(1 + rng() % 31));
    }
    const Antichain once = Canonicalize(family);
    const Antichain twice = Canonicalize(once.members());
    EXPECT_EQ(once, twice);
    for (VariableSet a : once.members()) {
      for (VariableSet b : once.members()) {
        if (a != b) EXPECT_FALSE(a.IsSubsetOf(b));
      }
    }
    // Every input member has a kept member below it.
    for (VariableSet s : family) {
      bool covered = false;
      for (VariableSet a : once.members()) covered |= a.IsSubsetOf(s);
      EXPECT_TRUE(covered);
    }
  }
}

TEST(IsBelowTest, PairCoversPairAndSingle) {
  EXPECT_TRUE(IsBelow(Canonicalize({S({0, 1}), S({2})}),
                      Canonicalize({S({0, 1}), S({2, 3})})));
}

TEST(IsBelowTest, Reflexive) {
  EXPECT_TRUE(IsBelow(Canonicalize({S({0})}), Canonicalize({S({0})})));
}

TEST(IsBelowTest, SynergyIsNotBelowRedundancy) {
  EXPECT_FALSE(IsBelow(Canonicalize({S({0, 1})}),
                       Canonicalize({S({0}), S({1})})));
  EXPECT_TRUE(IsBelow(Canonicalize({S({0}), S({1})}),
                      Canonicalize({S({0, 1})})));
}

TEST(LabelTest, DigitsInBracesSortedLexicographically) {
  EXPECT_EQ(Label(Canonicalize({S({0, 1}), S({2})})), "{01}{2}");
  EXPECT_EQ(Label(Canonicalize({S({0, 1, 3}), S({2})})), "{013}{2}");
  EXPECT_EQ(Label(Canonicalize({S({0}), S({1, 2})})), "{0}{12}");
}

TEST(LabelTest, NamedLabels) {
  const std::vector<std::string> names = {"A", "B", "C"};
  EXPECT_EQ(Label(Canonicalize({S({0, 2})}), names), "{AC}");
  const std::vector<std::string> words = {"not", "bad"};
  EXPECT_EQ(Label(Canonicalize({S({0, 1})}), words, ","), "{not,bad}");
}

TEST(LabelTest, ParseRoundTrip) {
  for (uint32_t f = 1; f < 32; ++f) {
    std::vector<VariableSet> family;
    for (uint32_t s = 1; s < 8; ++s) {
      if ((f >> (s % 5)) & 1u) family.push_back(VariableSet::FromBits(s));
    }
    if (family.empty()) continue;
    const Antichain a = Canonicalize(family);
    EXPECT_EQ(ParseLabel(Label(a)), a);
  }
}

TEST(LabelTest, ParseErrors) {
  EXPECT_THROW(ParseLabel(""), ParseError);
  EXPECT_THROW(ParseLabel("{}"), ParseError);
  EXPECT_THROW(ParseLabel("{01"), ParseError);
  EXPECT_THROW(ParseLabel("{0}x"), ParseError);
  EXPECT_THROW(ParseLabel("{9}"), ParseError);
}

}  // namespace
}  // namespace causal_decomp
