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
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brute_force.h"
#include "causal_decomp/errors.h"
#include "gtest/gtest.h"

namespace causal_decomp {
namespace {

using testing::AllAntichainsByFiltering;
using testing::BelowByDefinition;
using testing::Family;

Antichain FromFamily(Family f) {
  std::vector<VariableSet> members;
  for (uint32_t s : testing::Members(f)) {
    members.push_back(VariableSet::FromBits(s));
  }
  return Canonicalize(members);
}

TEST(LatticeTest, NodeCountsMatchDedekindNumbers) {
  const size_t expected[] = {0, 1, 4, 18, 166, 7579};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(RedundancyLattice::Build(n)->size(), expected[n]) << n;
    EXPECT_EQ(ExpectedLatticeSize(n), expected[n]);
  }
}

TEST(LatticeTest, EnumerationMatchesFilteringAllFamilies) {
  for (int n = 1; n <= 4; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    std::set<uint32_t> ours;
    for (const Antichain& a : lattice->nodes()) ours.insert(a.FamilyBits());
    std::set<uint32_t> brute;
    for (Family f : AllAntichainsByFiltering(n)) {
      brute.insert(static_cast<uint32_t>(f));
    }
    EXPECT_EQ(ours, brute) << "n = " << n;
  }
}

TEST(LatticeTest, FiveVariablesAgreesWithPairCounting) {
  // Antichains of B_5 <-> monotone functions of 5 variables <-> pairs f <= g
  // of monotone functions of 4 variables. Two families are not nodes.
  EXPECT_EQ(testing::DedekindByPairs(4), 7581u);
  EXPECT_EQ(RedundancyLattice::Build(5)->size(), 7581u - 2);
}

TEST(LatticeTest, OutOfRangeIsCapacityError) {
  EXPECT_THROW(RedundancyLattice::Build(0), CapacityError);
  try {
    RedundancyLattice::Build(6);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("Dedekind"), std::string::npos);
  }
}

TEST(LatticeTest, BottomAndTop) {
  for (int n = 1; n <= 5; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    std::vector<VariableSet> singles;
    for (int i = 0; i < n; ++i) singles.push_back(VariableSet::Of({i}));
    EXPECT_EQ(lattice->node(lattice->bottom()), Canonicalize(singles));
    EXPECT_EQ(lattice->node(lattice->top()),
              Canonicalize({VariableSet::Full(n)}));
  }
}

TEST(LatticeTest, OrderMatchesDefinitionExhaustively) {
  for (int n = 1; n <= 4; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    for (NodeId a = 0; a < lattice->size(); ++a) {
      for (NodeId b = 0; b < lattice->size(); ++b) {
        const bool fast = lattice->IsBelow(a, b);
        ASSERT_EQ(fast, IsBelow(lattice->node(a), lattice->node(b)));
        ASSERT_EQ(fast, BelowByDefinition(lattice->node(a).FamilyBits(),
                                          lattice->node(b).FamilyBits()));
        // Node ids form a linear extension.
        if (fast) ASSERT_LE(a, b);
      }
    }
  }
}

TEST(LatticeTest, PartialOrderAxioms) {
  // Exhaustive for n <= 3.
  for (int n = 1; n <= 3; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    const NodeId size = static_cast<NodeId>(lattice->size());
    for (NodeId a = 0; a < size; ++a) {
      EXPECT_TRUE(lattice->IsBelow(a, a));
      for (NodeId b = 0; b < size; ++b) {
        if (a != b) {
          EXPECT_FALSE(lattice->IsBelow(a, b) && lattice->IsBelow(b, a));
        }
        for (NodeId c = 0; c < size; ++c) {
          if (lattice->IsBelow(a, b) && lattice->IsBelow(b, c)) {
            EXPECT_TRUE(lattice->IsBelow(a, c));
          }
        }
      }
    }
  }
  // Sampled for n = 4, 5.
  std::mt19937 rng(11);
  for (int n = 4; n <= 5; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    std::uniform_int_distribution<NodeId> pick(0, lattice->top());
    for (int trial = 0; trial < 20000; ++trial) {
      const NodeId a = pick(rng), b = pick(rng), c = pick(rng);
      if (a != b) {
        ASSERT_FALSE(lattice->IsBelow(a, b) && lattice->IsBelow(b, a));
      }
      if (lattice->IsBelow(a, b) && lattice->IsBelow(b, c)) {
        ASSERT_TRUE(lattice->IsBelow(a, c));
      }
      ASSERT_EQ(lattice->IsBelow(a, b),
                BelowByDefinition(lattice->node(a).FamilyBits(),
                                  lattice->node(b).FamilyBits()));
    }
  }
}

TEST(LatticeTest, CoversAreExactlyTheTransitiveReduction) {
  for (int n = 1; n <= 4; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    const NodeId size = static_cast<NodeId>(lattice->size());
    size_t edges = 0;
    for (NodeId b = 0; b < size; ++b) {
      std::set<NodeId> covers(lattice->LowerCovers(b).begin(),
                              lattice->LowerCovers(b).end());
      for (NodeId a = 0; a < size; ++a) {
        bool is_cover = a != b && lattice->IsBelow(a, b);
        for (NodeId z = 0; z < size && is_cover; ++z) {
          if (z != a && z != b && lattice->IsBelow(a, z) &&
              lattice->IsBelow(z, b)) {
            is_cover = false;
          }
        }
        ASSERT_EQ(is_cover, covers.count(a) == 1)
            << Label(lattice->node(a)) << " < " << Label(lattice->node(b));
      }
      edges += covers.size();
      for (NodeId a : covers) {
        const auto up = lattice->UpperCovers(a);
        EXPECT_TRUE(std::find(up.begin(), up.end(), b) != up.end());
      }
    }
    EXPECT_EQ(edges, lattice->NumCoverEdges());
  }
}

TEST(LatticeTest, ThreeVariableHasseDiagram) {
  // Hand-transcribed Hasse diagram of the 18-element lattice, bottom to top.
  const std::set<std::pair<std::string, std::string>> expected = {
      {"{0}{1}{2}", "{0}{1}"},       {"{0}{1}{2}", "{0}{2}"},
      {"{0}{1}{2}", "{1}{2}"},       {"{0}{1}", "{0}{12}"},
      {"{0}{1}", "{02}{1}"},         {"{0}{2}", "{0}{12}"},
      {"{0}{2}", "{01}{2}"},         {"{1}{2}", "{02}{1}"},
      {"{1}{2}", "{01}{2}"},         {"{0}{12}", "{0}"},
      {"{02}{1}", "{1}"},            {"{01}{2}", "{2}"},
      {"{0}{12}", "{01}{02}{12}"},   {"{02}{1}", "{01}{02}{12}"},
      {"{01}{2}", "{01}{02}{12}"},   {"{0}", "{01}{02}"},
      {"{1}", "{01}{12}"},           {"{2}", "{02}{12}"},
      {"{01}{02}{12}", "{01}{02}"},  {"{01}{02}{12}", "{01}{12}"},
      {"{01}{02}{12}", "{02}{12}"},  {"{01}{02}", "{01}"},
      {"{01}{02}", "{02}"},          {"{01}{12}", "{01}"},
      {"{01}{12}", "{12}"},          {"{02}{12}", "{02}"},
      {"{02}{12}", "{12}"},          {"{01}", "{012}"},
      {"{02}", "{012}"},             {"{12}", "{012}"},
  };
  auto lattice = RedundancyLattice::Build(3);
  std::set<std::pair<std::string, std::string>> actual;
  for (NodeId b = 0; b < lattice->size(); ++b) {
    for (NodeId a : lattice->LowerCovers(b)) {
      actual.emplace(Label(lattice->node(a)), Label(lattice->node(b)));
    }
  }
  EXPECT_EQ(actual, expected);
}

TEST(MobiusTest, Diagonal) {
  auto lattice = RedundancyLattice::Build(3);
  for (NodeId a = 0; a < lattice->size(); ++a) {
    EXPECT_EQ(lattice->Mobius(a, a), 1);
  }
}

TEST(MobiusTest, TwoVariableDiamond) {
  auto lattice = RedundancyLattice::Build(2);
  const Antichain bottom =
      Canonicalize({VariableSet::Of({0}), VariableSet::Of({1})});
  const Antichain x0 = Canonicalize({VariableSet::Of({0})});
  const Antichain top = Canonicalize({VariableSet::Of({0, 1})});
  EXPECT_EQ(lattice->Mobius(bottom, top), 1);
  EXPECT_EQ(lattice->Mobius(bottom, x0), -1);
  EXPECT_EQ(lattice->Mobius(top, bottom), 0);
}

TEST(MobiusTest, UnknownNodeIsLookupError) {
  auto lattice = RedundancyLattice::Build(2);
  const Antichain outside = Canonicalize({VariableSet::Of({2})});
  const Antichain x0 = Canonicalize({VariableSet::Of({0})});
  EXPECT_THROW(lattice->Mobius(outside, x0), LookupError);
  EXPECT_THROW(lattice->IndexOf(outside), LookupError);
}

TEST(MobiusTest, MatchesRowRecursionOfDefinition) {
  for (int n = 1; n <= 3; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    std::vector<Family> elements;
    for (const Antichain& a : lattice->nodes()) {
      elements.push_back(a.FamilyBits());
    }
    testing::RowMobius reference(elements);
    for (NodeId a = 0; a < lattice->size(); ++a) {
      for (NodeId b = 0; b < lattice->size(); ++b) {
        ASSERT_EQ(lattice->Mobius(a, b), reference(elements[a], elements[b]))
            << Label(lattice->node(a)) << ", " << Label(lattice->node(b));
      }
    }
  }
}

TEST(MobiusTest, MatchesRowRecursionOnFourVariableSample) {
  auto lattice = RedundancyLattice::Build(4);
  std::vector<Family> elements;
  for (const Antichain& a : lattice->nodes()) elements.push_back(a.FamilyBits());
  testing::RowMobius reference(elements);
  // Rows from the bottom and a few interior nodes cover long intervals.
  for (NodeId a : {NodeId{0}, NodeId{1}, NodeId{5}, NodeId{40}, NodeId{100}}) {
    for (NodeId b = 0; b < lattice->size(); ++b) {
      ASSERT_EQ(lattice->Mobius(a, b), reference(elements[a], elements[b]));
    }
  }
}

TEST(MobiusTest, DeltaIdentity) {
  for (int n = 1; n <= 4; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    for (NodeId b = 1; b < lattice->size(); ++b) {
      int64_t sum = 0;
      for (NodeId a : lattice->DownSet(b)) sum += lattice->Mobius(a, b);
      EXPECT_EQ(sum, 0);
      // Row form: sum over [alpha, beta] of mu(alpha, z) vanishes too.
      int64_t row = 0;
      for (NodeId z = 0; z <= b; ++z) {
        if (lattice->IsBelow(0, z) && lattice->IsBelow(z, b)) {
          row += lattice->Mobius(0, z);
        }
      }
      EXPECT_EQ(row, 0);
    }
  }
}

TEST(MobiusTest, ZetaThenMobiusIsIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> value(-1000, 1000);
  for (int n = 2; n <= 4; ++n) {
    auto lattice = RedundancyLattice::Build(n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int64_t> g(lattice->size());
      for (auto& v : g) v = value(rng);
      const std::vector<int64_t> f = ZetaTransform<int64_t>(*lattice, g);
      EXPECT_EQ(MobiusTransform<int64_t>(*lattice, f), g);
      EXPECT_EQ(ZetaTransform<int64_t>(*lattice,
                                       MobiusTransform<int64_t>(*lattice, g)),
                g);
    }
  }
}

TEST(MobiusTest, FiveVariableColumnsAreLazyAndConsistent) {
  auto lattice = RedundancyLattice::Build(5);
  int64_t sum = 0;
  for (const MobiusEntry& e : lattice->MobiusColumn(lattice->top())) {
    sum += e.value;
  }
  EXPECT_EQ(sum, 0);
  EXPECT_EQ(lattice->Mobius(lattice->top(), lattice->top()), 1);
}

TEST(ExportTest, DotCounts) {
  auto count = [](const std::string& s, const std::string& what) {
    size_t c = 0;
    for (size_t pos = s.find(what); pos != std::string::npos;
         pos = s.find(what, pos + 1)) {
      ++c;
    }
    return c;
  };
  const std::string n1 = ExportDot(*RedundancyLattice::Build(1));
  EXPECT_EQ(count(n1, "[label="), 1u);
  EXPECT_EQ(count(n1, "->"), 0u);
  const std::string n2 = ExportDot(*RedundancyLattice::Build(2));
  EXPECT_EQ(count(n2, "[label="), 4u);
  EXPECT_EQ(count(n2, "->"), 4u);
  const std::string n3 = ExportDot(*RedundancyLattice::Build(3));
  EXPECT_EQ(count(n3, "[label="), 18u);
  EXPECT_EQ(count(n3, "->"), 30u);
  EXPECT_NE(n3.find("label=\"{01}{02}{12}\""), std::string::npos);
  EXPECT_EQ(n3, ExportDot(*RedundancyLattice::Build(3)));
}

TEST(ExportTest, TableListsLowerCovers) {
  const std::string table = ExportTable(*RedundancyLattice::Build(2));
  EXPECT_EQ(table,
            "id\tlabel\tlower_covers\n"
            "0\t{0}{1}\t\n"
            "1\t{0}\t0\n"
            "2\t{1}\t0\n"
            "3\t{01}\t1,2\n");
}

}  // namespace
}  // namespace causal_decomp
