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

#include "udg/wbcp.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "support/wbcp_fuzz.hpp"
#include "udg/oracle.hpp"

namespace udg {
namespace {

TEST(Wbcp, SingleBlueTwoReds) {
  const PointSet ps{{0, 0}, {2, 0}, {5, 0}};
  const std::vector<WeightedBlue> blues{{0, 0.0}};
  const std::vector<PointIndex> reds{1, 2};
  WbcpIndex index(ps, blues, reds);
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 1, 2.0}));
}

TEST(Wbcp, NoBluesIsEmpty) {
  const PointSet ps{{0, 0}, {2, 0}};
  const std::vector<PointIndex> reds{0, 1};
  WbcpIndex index(ps, {}, reds);
  EXPECT_FALSE(index.min_pair().has_value());
}

TEST(Wbcp, WeightDominatesProximity) {
  const PointSet ps{{0, 0}, {4, 0}, {1, 0}};
  const std::vector<WeightedBlue> blues{{0, 10.0}, {1, 0.0}};
  const std::vector<PointIndex> reds{2};
  WbcpIndex index(ps, blues, reds);
  EXPECT_EQ(index.min_pair(), (BcpPair{1, 2, 3.0}));
  EXPECT_EQ(oracle::naive_bcp(ps, blues, reds), (BcpPair{1, 2, 3.0}));
  index.delete_red(2);
  EXPECT_FALSE(index.min_pair().has_value());
}

TEST(Wbcp, InsertBlue) {
  const PointSet ps{{0, 0}, {3, 4}};
  const std::vector<PointIndex> reds{1};
  WbcpIndex index(ps, {}, reds);
  index.insert_blue({0, 1.0});
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 1, 6.0}));

  // Zero weight at the red's own location.
  const PointSet twin{{2, 2}, {2, 2}};
  const std::vector<PointIndex> one{1};
  WbcpIndex z(twin, {}, one);
  z.insert_blue({0, 0.0});
  EXPECT_EQ(z.min_pair(), (BcpPair{0, 1, 0.0}));
}

TEST(Wbcp, DeleteBlue) {
  const PointSet ps{{0, 0}, {1, 0}, {3, 0}, {10, 0}};
  const std::vector<WeightedBlue> blues{{0, 0.0}, {2, 0.5}};
  const std::vector<PointIndex> reds{1, 3};
  WbcpIndex index(ps, blues, reds);
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 1, 1.0}));
  index.delete_blue(0);
  EXPECT_EQ(index.min_pair(), (BcpPair{2, 1, 2.5}));
  index.insert_blue({0, 0.0});
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 1, 1.0}));
  index.delete_blue(0);
  index.delete_blue(2);
  EXPECT_FALSE(index.min_pair().has_value());
}

TEST(Wbcp, DeleteRed) {
  const PointSet ps{{0, 0}, {1, 0}, {2, 0}, {-5, 0}};
  const std::vector<WeightedBlue> blues{{0, 0.0}};
  const std::vector<PointIndex> reds{1, 2, 3};
  WbcpIndex index(ps, blues, reds);
  index.delete_red(3);  // unrelated
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 1, 1.0}));
  index.delete_red(1);  // current minimum
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 2, 2.0}));
  index.delete_red(2);
  EXPECT_FALSE(index.min_pair().has_value());
}

TEST(Wbcp, TieOrderBlueThenRed) {
  // Both blues reach both reds at delta 1.
  const PointSet ps{{0, 0}, {2, 0}, {1, 0}, {1, 0}};
  const std::vector<WeightedBlue> blues{{1, 0.0}, {0, 0.0}};
  const std::vector<PointIndex> reds{3, 2};
  WbcpIndex index(ps, blues, reds);
  EXPECT_EQ(index.min_pair(), (BcpPair{0, 2, 1.0}));
}

TEST(Wbcp, Errors) {
  const PointSet ps{{0, 0}, {1, 0}, {2, 0}};
  const std::vector<PointIndex> reds{1, 2};
  const std::vector<WeightedBlue> overlap{{1, 0.0}};
  EXPECT_THROW(WbcpIndex(ps, overlap, reds), std::invalid_argument);
  const std::vector<PointIndex> bad{7};
  EXPECT_THROW(WbcpIndex(ps, {}, bad), std::out_of_range);
  const std::vector<PointIndex> twice{1, 1};
  EXPECT_THROW(WbcpIndex(ps, {}, twice), std::invalid_argument);

  const std::vector<WeightedBlue> blues{{0, 0.0}};
  WbcpIndex index(ps, blues, reds);
  EXPECT_THROW(index.insert_blue({0, 1.0}), std::invalid_argument);
  EXPECT_THROW(index.insert_blue({1, 1.0}), std::invalid_argument);
  EXPECT_THROW(index.delete_blue(1), std::invalid_argument);
  EXPECT_THROW(index.delete_red(0), std::invalid_argument);
  index.delete_red(1);
  EXPECT_THROW(index.delete_red(1), std::invalid_argument);
  index.delete_blue(0);
  EXPECT_THROW(index.insert_blue({0, -1.0}), std::invalid_argument);
}

TEST(Wbcp, ShortSequencesMatchNaiveScan) {
  const auto report = testing::fuzz_wbcp(5000, 24, 30, 1);
  EXPECT_EQ(report.mismatches, 0u) << report.first_failure;
  EXPECT_EQ(report.residency_violations, 0u);
}

TEST(Wbcp, LongSequencesMatchNaiveScan) {
  // Continuous-coordinate, long-running sequences with red-tree rebuilds.
  std::mt19937_64 rng(77);
  std::size_t operations = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const PointSet ps = oracle::generate(
        {.n = 400, .side = 6.0, .seed = rng(), .min_threshold_margin = 0.0});
    std::vector<int> role(ps.size(), 0);  // 0 none, 1 blue, 2 red
    std::vector<double> weight(ps.size(), 0.0);
    std::vector<WeightedBlue> blues;
    std::vector<PointIndex> reds;
    for (PointIndex i = 0; i < ps.size(); ++i) {
      if (i % 10 == 0) {
        role[i] = 1;
        weight[i] = static_cast<double>(rng() % 1000) / 250.0;
        blues.push_back({i, weight[i]});
      } else {
        role[i] = 2;
        reds.push_back(i);
      }
    }
    WbcpIndex index(ps, blues, reds);
    while (index.red_count() > 0) {
      ++operations;
      std::vector<WeightedBlue> bs;
      std::vector<PointIndex> rs, fs;
      for (PointIndex i = 0; i < ps.size(); ++i) {
        if (role[i] == 1) bs.push_back({i, weight[i]});
        if (role[i] == 2) rs.push_back(i);
        if (role[i] == 0) fs.push_back(i);
      }
      ASSERT_EQ(index.min_pair(), oracle::naive_bcp(ps, bs, rs));
      const auto op = rng() % 8;
      if (op < 4) {
        const PointIndex r = rs[rng() % rs.size()];
        index.delete_red(r);
        role[r] = 0;
      } else if (op < 6 && !fs.empty()) {
        const PointIndex f = fs[rng() % fs.size()];
        weight[f] = static_cast<double>(rng() % 1000) / 250.0;
        index.insert_blue({f, weight[f]});
        role[f] = 1;
      } else if (!bs.empty()) {
        const PointIndex b = bs[rng() % bs.size()].index;
        index.delete_blue(b);
        role[b] = 0;
      }
      ASSERT_LE(index.candidate_count(),
                WbcpIndex::kCandidateFactor *
                    (index.blue_count() + index.red_count()));
    }
    EXPECT_GT(index.counters().red_rebuilds, 0u);
  }
  EXPECT_GT(operations, 1000u);
}

}  // namespace
}  // namespace udg
