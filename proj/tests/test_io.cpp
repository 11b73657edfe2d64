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

#include "udg/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "udg/oracle.hpp"
#include "udg/unweighted_sssp.hpp"
#include "udg/weighted_sssp.hpp"

namespace udg::io {
namespace {

PointSet parse(const std::string& text) {
  std::istringstream in(text);
  return read_points(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(PointsFile, ParsesWithComments) {
  const PointSet ps = parse("# chain\n4\n0 0\n0.9 0\n# gap\n1.8 0\n2.7 0\n");
  EXPECT_EQ(ps, (PointSet{{0, 0}, {0.9, 0}, {1.8, 0}, {2.7, 0}}));
}

TEST(PointsFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("2\n0 0\n1 x\n"), 3u);
  EXPECT_EQ(error_line("2\n0 0\n"), 2u);
  EXPECT_EQ(error_line("1\n0 0\n5 5\n"), 3u);
  EXPECT_EQ(error_line("1\n0 0 0\n"), 2u);
  EXPECT_EQ(error_line("1\nnan 0\n"), 2u);
  EXPECT_EQ(error_line("0\n"), 1u);
  EXPECT_EQ(error_line("# only a comment\n"), 1u);
  EXPECT_EQ(error_line("two\n"), 1u);
}

// Writing and re-reading reproduces the exact coordinates.
TEST(PointsFile, RoundTrip) {
  for (auto shape : {oracle::Shape::kUniformSquare, oracle::Shape::kClusters,
                     oracle::Shape::kCollinear}) {
    const PointSet ps = oracle::generate({.n = 300, .shape = shape, .side = 7.3, .seed = 11});
    std::ostringstream out;
    write_points(out, ps);
    EXPECT_EQ(parse(out.str()), ps);
  }
}

TEST(TreeFile, Format) {
  const PointSet chain{{0, 0}, {0.9, 0}, {1.8, 0}, {2.7, 0}, {9, 9}};
  std::ostringstream out;
  write_tree(out, unweighted_sssp(chain, 0), Mode::kUnweighted);
  EXPECT_EQ(out.str(),
            "source 0 radius 1 mode unweighted\n"
            "0 0 -1\n1 1 0\n2 2 1\n3 3 2\n4 inf -1\n");

  std::ostringstream wout;
  write_tree(wout, weighted_sssp(PointSet{{0, 0}, {0.1, 0}}, 0, 1.5), Mode::kWeighted);
  EXPECT_EQ(wout.str(),
            "source 0 radius 1.5 mode weighted\n"
            "0 0 -1\n1 0.10000000000000001 0\n");
}

TEST(TreeFile, RoundTrip) {
  const PointSet ps = oracle::generate({.n = 200, .side = 8.0, .seed = 3});
  const auto tree = weighted_sssp(ps, 5);
  std::ostringstream out;
  write_tree(out, tree, Mode::kWeighted);
  std::istringstream in(out.str());
  const TreeFile back = read_tree(in);
  EXPECT_EQ(back.mode, Mode::kWeighted);
  EXPECT_EQ(back.tree.source, 5u);
  EXPECT_EQ(back.tree.radius, 1.0);
  EXPECT_EQ(back.tree.dist, tree.dist);
  EXPECT_EQ(back.tree.parent, tree.parent);
}

TEST(TreeFile, RejectsMalformed) {
  for (const char* text : {"", "source 0 radius 1\n0 0 -1\n",
                           "source 0 radius 1 mode other\n0 0 -1\n",
                           "source 0 radius 1 mode weighted\n1 0 -1\n",
                           "source 3 radius 1 mode weighted\n0 0 -1\n",
                           "source 0 radius 1 mode weighted\n0 0 -2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_tree(in), ParseError) << text;
  }
}

}  // namespace
}  // namespace udg::io
