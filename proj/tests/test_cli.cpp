// Copyright 2026 The udgsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "udg/cli/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/corpus.hpp"
#include "udg/unweighted_sssp.hpp"

namespace udg::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("udgsp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string save(const std::string& name, const PointSet& points) const {
    std::ofstream out(path(name));
    io::write_points(out, points);
    return path(name);
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

constexpr const char* kChain = "4\n0 0\n0.9 0\n1.8 0\n2.7 0\n";

TEST_F(CliTest, SolveChainUnweighted) {
  const SolveOptions options{.input = write("chain.txt", kChain)};
  ASSERT_EQ(cmd_solve(options, out_, err_), kOk) << err_.str();
  EXPECT_EQ(out_.str(),
            "source 0 radius 1 mode unweighted\n"
            "0 0 -1\n1 1 0\n2 2 1\n3 3 2\n");
}

TEST_F(CliTest, SolveWeightedWithTrace) {
  const SolveOptions options{.input = write("chain.txt", kChain),
                             .mode = io::Mode::kWeighted,
                             .output = path("tree.txt"),
                             .trace = path("trace.txt")};
  ASSERT_EQ(cmd_solve(options, out_, err_), kOk) << err_.str();
  EXPECT_EQ(out_.str(), "");
  std::ifstream tree_in(path("tree.txt"));
  const io::TreeFile tree = io::read_tree(tree_in);
  EXPECT_EQ(tree.mode, io::Mode::kWeighted);
  EXPECT_EQ(tree.tree.dist[3], 0.9 + 0.9 + 0.9);

  // Every settle line names a red that is then reported in the tree.
  std::istringstream trace(slurp(path("trace.txt")));
  std::string line;
  std::size_t settles = 0;
  while (std::getline(trace, line)) settles += line.find("settle_red") != std::string::npos;
  EXPECT_EQ(settles, 3u);
}

TEST_F(CliTest, SolveIsBitDeterministic) {
  const std::string input =
      save("pts.txt", oracle::generate({.n = 800, .side = 12.0, .seed = 8}));
  for (io::Mode mode : {io::Mode::kUnweighted, io::Mode::kWeighted}) {
    std::ostringstream first, second;
    const SolveOptions options{.input = input, .source = 17, .mode = mode,
                               .trace = mode == io::Mode::kWeighted ? path("t.txt") : ""};
    ASSERT_EQ(cmd_solve(options, first, err_), kOk);
    const std::string trace = options.trace.empty() ? "" : slurp(options.trace);
    ASSERT_EQ(cmd_solve(options, second, err_), kOk);
    EXPECT_EQ(first.str(), second.str());
    if (!trace.empty()) EXPECT_EQ(trace, slurp(options.trace));
  }
}

TEST_F(CliTest, SolveInputErrors) {
  const std::string chain = write("chain.txt", kChain);
  EXPECT_EQ(cmd_solve({.input = path("missing.txt")}, out_, err_), kInputError);
  EXPECT_EQ(cmd_solve({.input = chain, .source = 4}, out_, err_), kInputError);
  EXPECT_NE(err_.str().find("source index 4"), std::string::npos);
  EXPECT_EQ(cmd_solve({.input = chain, .radius = 0.0}, out_, err_), kInputError);
  EXPECT_EQ(cmd_solve({.input = chain, .trace = path("t.txt")}, out_, err_),
            kInputError);
  err_.str("");
  EXPECT_EQ(cmd_solve({.input = write("bad.txt", "2\n0 0\n1 oops\n")}, out_, err_),
            kInputError);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
}

TEST_F(CliTest, GenRoundTrip) {
  const GenOptions options{
      .spec = {.n = 500, .shape = oracle::Shape::kClusters, .side = 20.0, .seed = 77}};
  ASSERT_EQ(cmd_gen(options, out_, err_), kOk);
  std::istringstream in(out_.str());
  EXPECT_EQ(io::read_points(in), oracle::generate(options.spec));

  std::ostringstream again;
  ASSERT_EQ(cmd_gen(options, again, err_), kOk);
  EXPECT_EQ(out_.str(), again.str());
}

TEST_F(CliTest, GenDegreeAndErrors) {
  GenOptions options{.spec = {.n = 400, .seed = 3}, .degree = 12.0};
  ASSERT_EQ(cmd_gen(options, out_, err_), kOk);
  std::istringstream in(out_.str());
  const PointSet ps = io::read_points(in);
  double max_coord = 0.0;
  for (const Point& p : ps.points()) max_coord = std::max({max_coord, p.x, p.y});
  EXPECT_LE(max_coord, oracle::side_for_degree(400, 12.0));

  EXPECT_EQ(cmd_gen({.spec = {.n = 0}}, out_, err_), kInputError);
  EXPECT_EQ(cmd_gen({.spec = {.n = 4, .shape = oracle::Shape::kGrid, .side = 2.0}},
                    out_, err_),
            kInputError);
  EXPECT_EQ(cmd_gen({.spec = {.n = 10}, .degree = -1.0}, out_, err_), kInputError);
}

TEST_F(CliTest, GridCenterReachesAllNeighbors) {
  ASSERT_EQ(cmd_gen({.spec = {.n = 9, .shape = oracle::Shape::kGrid, .side = 2.0},
                     .output = path("grid.txt")},
                    out_, err_),
            kOk);
  // Spacing 2/3: diagonal neighbors sit at 0.943, inside the unit radius.
  const SolveOptions options{.input = path("grid.txt"), .source = 4};
  ASSERT_EQ(cmd_solve(options, out_, err_), kOk);
  std::istringstream in(out_.str());
  const io::TreeFile tree = io::read_tree(in);
  for (PointIndex p = 0; p < 9; ++p) {
    EXPECT_EQ(tree.tree.dist[p], p == 4 ? 0.0 : 1.0);
  }

  // Spacing 4/3 with radius 1.5: axis neighbors at 1, diagonals at 2 hops.
  ASSERT_EQ(cmd_gen({.spec = {.n = 9, .shape = oracle::Shape::kGrid, .side = 4.0,
                              .radius = 1.5},
                     .output = path("wide.txt")},
                    out_, err_),
            kOk);
  std::ostringstream wide;
  ASSERT_EQ(cmd_solve({.input = path("wide.txt"), .source = 4, .radius = 1.5}, wide, err_),
            kOk);
  std::istringstream win(wide.str());
  const io::TreeFile wtree = io::read_tree(win);
  const std::vector<double> expected{2, 1, 2, 1, 0, 1, 2, 1, 2};
  EXPECT_EQ(wtree.tree.dist, expected);
}

TEST_F(CliTest, VerifyCorpusInstances) {
  for (const auto& instance : testing::small_corpus(12, 400, 2024)) {
    const VerifyOptions options{.input = save("inst.txt", instance.points),
                                .source = instance.source,
                                .radius = instance.radius};
    std::ostringstream report;
    EXPECT_EQ(cmd_verify(options, report, err_), kOk) << instance.name << '\n'
                                                     << report.str();
    const std::string text = report.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  }
  EXPECT_EQ(cmd_verify({.input = write("chain.txt", kChain), .source = 9}, out_, err_),
            kInputError);
}

TEST_F(CliTest, BenchCsv) {
  const BenchOptions options{.sizes = {300, 600}, .degree = 6.0, .seeds = 2};
  ASSERT_EQ(cmd_bench(options, out_, err_), kOk) << err_.str();
  std::istringstream csv(out_.str());
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "n,mode,build_ms,solve_ms,explicit_oracle_ms,dt_edges,bcp_ops");
  std::vector<std::string> rows;
  while (std::getline(csv, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rfind("300,unweighted,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("600,weighted,", 0), 0u);
  for (const std::string& row : rows) {
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6);
  }

  // Counting columns do not depend on timing.
  const auto counts = [](const std::string& text) {
    std::istringstream in(text);
    std::string row, keep;
    while (std::getline(in, row)) {
      const auto tail = row.rfind(',', row.rfind(',') - 1);
      keep += row.substr(0, row.find(',', row.find(',') + 1)) + row.substr(tail) + '\n';
    }
    return keep;
  };
  std::ostringstream again;
  ASSERT_EQ(cmd_bench(options, again, err_), kOk);
  EXPECT_EQ(counts(out_.str()), counts(again.str()));

  EXPECT_EQ(cmd_bench({.sizes = {}}, out_, err_), kInputError);
}

TEST_F(CliTest, PlotLevels) {
  const std::string input = write("chain.txt", kChain);
  ASSERT_EQ(cmd_solve({.input = input, .output = path("tree.txt")}, out_, err_), kOk);
  std::ostringstream svg;
  ASSERT_EQ(cmd_plot({.input = input, .tree = path("tree.txt")}, svg, err_), kOk);
  const std::string text = svg.str();
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  EXPECT_NE(text.find("</svg>"), std::string::npos);
  const auto count = [](const std::string& s, const std::string& what) {
    std::size_t k = 0;
    for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++k;
    return k;
  };
  EXPECT_EQ(count(text, "class=\"level\""), 4u);
  EXPECT_EQ(count(text, "<line"), 3u);

  std::ostringstream one;
  ASSERT_EQ(cmd_plot({.input = input, .tree = path("tree.txt"), .shade_level = 2}, one, err_),
            kOk);
  EXPECT_EQ(count(one.str(), "class=\"level\""), 1u);
  EXPECT_NE(one.str().find("data-level=\"2\""), std::string::npos);

  EXPECT_EQ(cmd_plot({.input = write("two.txt", "2\n0 0\n1 1\n"), .tree = path("tree.txt")},
                     one, err_),
            kInputError);
}

TEST(CliHelpers, SeedFromEnv) {
  ::unsetenv("UDG_SEED");
  EXPECT_FALSE(seed_from_env().has_value());
  ::setenv("UDG_SEED", "18446744073709551615", 1);
  EXPECT_EQ(seed_from_env(), 18446744073709551615ull);
  ::setenv("UDG_SEED", "12x", 1);
  EXPECT_THROW(seed_from_env(), std::invalid_argument);
  ::setenv("UDG_SEED", "", 1);
  EXPECT_THROW(seed_from_env(), std::invalid_argument);
  ::unsetenv("UDG_SEED");
}

TEST(CliHelpers, ParseModes) {
  EXPECT_EQ(parse_modes("weighted"), std::vector{io::Mode::kWeighted});
  EXPECT_EQ(parse_modes("both")->size(), 2u);
  EXPECT_FALSE(parse_modes("dijkstra").has_value());
}

}  // namespace
}  // namespace udg::cli
