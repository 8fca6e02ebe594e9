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

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "causal_decomp/errors.h"
#include "gtest/gtest.h"

namespace causal_decomp::cli {
namespace {

std::string Render(const ResultTable& table, OutputFormat format = OutputFormat::kCsv) {
  std::ostringstream out;
  table.Write(out, format);
  return out.str();
}

int Column(const ResultTable& t, const std::string& name) {
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return static_cast<int>(i);
  }
  ADD_FAILURE() << "no column " << name;
  return 0;
}

double Number(const ResultTable::Cell& cell) { return std::get<double>(cell); }
std::string Text(const ResultTable::Cell& cell) { return std::get<std::string>(cell); }

TEST(GridTest, Parsing) {
  EXPECT_EQ(ParseGrid("0.5").Values(), (std::vector<double>{0.5}));
  const std::vector<double> lin = ParseGrid("0:1:5").Values();
  EXPECT_EQ(lin, (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  const std::vector<double> log = ParseGrid("1:1000:4:log").Values();
  ASSERT_EQ(log.size(), 4u);
  EXPECT_NEAR(log[1], 10.0, 1e-12);
  EXPECT_EQ(log.back(), 1000.0);
  EXPECT_TRUE(ParseGrid("1:100:3", true).log_scale);
  EXPECT_THROW(ParseGrid("0:1"), DomainError);
  EXPECT_THROW(ParseGrid("0:1:0"), DomainError);
  EXPECT_THROW(ParseGrid("0:1:3:cubic"), DomainError);
  EXPECT_THROW(ParseGrid("abc"), DomainError);
}

TEST(SeedTest, Parsing) {
  EXPECT_EQ(ParseSeeds("0-3"), (std::vector<uint64_t>{0, 1, 2, 3}));
  EXPECT_EQ(ParseSeeds("1,5,7"), (std::vector<uint64_t>{1, 5, 7}));
  EXPECT_EQ(ParseSeeds("4"), (std::vector<uint64_t>{4}));
  EXPECT_THROW(ParseSeeds("3-1"), DomainError);
  EXPECT_THROW(ParseSeeds("a"), DomainError);
  EXPECT_THROW(ParseSeeds(""), DomainError);
}

TEST(GatesCommandTest, SymmetricGatesHaveNoUniqueParts) {
  for (Gate gate : {Gate::kOr, Gate::kAnd, Gate::kXor}) {
    const ResultTable t = RunGates({gate, Grid{0.01, 0.99, 99, false}});
    EXPECT_EQ(t.rows.size(), 99u * 4);
    const int label = Column(t, "antichain");
    const int partial = Column(t, "partial");
    for (const auto& row : t.rows) {
      if (Text(row[label]) == "{0}" || Text(row[label]) == "{1}") {
        EXPECT_NEAR(Number(row[partial]), 0.0, 1e-12);
      }
    }
  }
  const ResultTable copy = RunGates({Gate::kCopy, Grid{0.5, 0.5, 1, false}});
  for (const auto& row : copy.rows) {
    const double expected = Text(row[Column(copy, "antichain")]) == "{0}" ? 1.0 : 0.0;
    EXPECT_EQ(Number(row[Column(copy, "partial")]), expected);
  }
}

TEST(GatesCommandTest, CsvGolden) {
  EXPECT_EQ(Render(RunGates({Gate::kCopy, Grid{0.5, 0.5, 1, false}})),
            "gate,p,antichain,named,partial,residual\n"
            "copy,0.5,{0}{1},{X1}{X2},0,0\n"
            "copy,0.5,{0},{X1},1,0\n"
            "copy,0.5,{1},{X2},0,0\n"
            "copy,0.5,{01},\"{X1,X2}\",0,0\n");
}

TEST(GatesCommandTest, JsonHasOrderedRows) {
  const std::string json =
      Render(RunGates({Gate::kOr, Grid{0.5, 0.5, 1, false}}), OutputFormat::kJson);
  EXPECT_NE(json.find("\"command\": \"gates\""), std::string::npos);
  EXPECT_LT(json.find("\"gate\""), json.find("\"partial\""));
  EXPECT_EQ(ParseOutputFormat("json"), OutputFormat::kJson);
  EXPECT_THROW(ParseOutputFormat("xml"), DomainError);
}

TEST(CaCommandTest, DeterministicAndAggregated) {
  CaConfig config;
  config.rule = 90;
  config.priors = {PriorKind::kMaxEnt, PriorKind::kZeros, PriorKind::kMiddleOne};
  config.simulation = SimulationParams{30, 300, 50};
  config.seeds = ParseSeeds("0-2");
  const std::string first = Render(RunCa(config));
  EXPECT_EQ(first, Render(RunCa(config)));

  const ResultTable t = RunCa(config);
  const int prior = Column(t, "prior");
  const int label = Column(t, "antichain");
  const int mean = Column(t, "mean");
  for (const auto& row : t.rows) {
    if (Text(row[prior]) == "maxent") {
      EXPECT_NEAR(Number(row[mean]), Text(row[label]) == "{02}" ? 1.0 : 0.0, 1e-12);
      EXPECT_EQ(Text(row[Column(t, "seeds")]), "-");
    }
    if (Text(row[prior]) == "zeros") {
      EXPECT_NEAR(Number(row[mean]), Text(row[label]) == "{0}{2}" ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(CaCommandTest, PerSeedRowsAndStrictMode) {
  CaConfig config;
  config.rule = 30;
  config.priors = {PriorKind::kRandomInit};
  config.seeds = ParseSeeds("0-1");
  config.per_seed = true;
  config.min_display = 0.0;
  const ResultTable t = RunCa(config);
  EXPECT_EQ(t.columns[Column(t, "seed")], "seed");
  EXPECT_EQ(t.rows.size(), 2u * 18);
  config.strict = true;
  EXPECT_THROW(RunCa(config), MonotonicityError);
}

TEST(ChemicalCommandTest, DefaultSweep) {
  const ResultTable t = RunChemical(ChemicalConfig{});
  EXPECT_EQ(t.rows.size(), 60u * 4);
  ChemicalConfig linear;
  linear.k3_grid = Grid{0, 0, 1, false};
  const ResultTable z = RunChemical(linear);
  const int label = Column(z, "antichain");
  for (const auto& row : z.rows) {
    const std::string a = Text(row[label]);
    const double expected = a == "{0}" ? 9.0 / 11 : a == "{1}" ? 0.0 : 1.0 / 11;
    EXPECT_NEAR(Number(row[Column(z, "partial")]), expected, 1e-12) << a;
  }
}

TEST(DecomposeCommandTest, FixtureRows) {
  std::ifstream in(std::string(CAUSAL_DECOMP_TEST_DATA) +
                   "/sentiment_fixture_not_bad.json");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const ResultTable t = RunDecompose(buffer.str());
  EXPECT_EQ(t.rows.size(), 25u * 4);
  EXPECT_EQ(Text(t.rows[3][Column(t, "named")]), "{not,bad}");
  EXPECT_GT(Number(t.rows[3][Column(t, "partial")]), 0.0);
  EXPECT_THROW(RunDecompose("{}"), ParseError);
}

TEST(LatticeCommandTest, Summaries) {
  EXPECT_EQ(RunLattice(3, LatticeExport::kSummary), "n,nodes,cover_edges\n3,18,30\n");
  EXPECT_EQ(RunLattice(5, LatticeExport::kSummary),
            "n,nodes,cover_edges\n5,7579,35510\n");
  EXPECT_EQ(RunLattice(2, LatticeExport::kDot).rfind("digraph", 0), 0u);
  EXPECT_EQ(ParseLatticeExport("table"), LatticeExport::kTable);
  EXPECT_THROW(RunLattice(6, LatticeExport::kSummary), CapacityError);
}

TEST(CausesCommandTest, Reports) {
  const std::string conjunction = "000 0\n100 0\n010 0\n001 0\n110 0\n101 0\n011 0\n111 1\n";
  const std::string all_zero = RunCauses(conjunction, "000", OutputFormat::kCsv);
  EXPECT_NE(all_zero.find("  {012} (X0 and X1 and X2)"), std::string::npos) << all_zero;
  EXPECT_NE(all_zero.find("necessary causes: {012}"), std::string::npos);
  const std::string shifted = RunCauses(conjunction, "001", OutputFormat::kJson);
  EXPECT_NE(shifted.find("\"antichain\": \"{01}\""), std::string::npos) << shifted;
  EXPECT_THROW(RunCauses(conjunction, "01", OutputFormat::kCsv), DomainError);
  EXPECT_THROW(RunCauses(conjunction, "0a0", OutputFormat::kCsv), DomainError);
}

}  // namespace
}  // namespace causal_decomp::cli
