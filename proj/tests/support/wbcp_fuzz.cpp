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

#include "support/wbcp_fuzz.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "udg/oracle.hpp"
#include "udg/wbcp.hpp"

namespace udg::testing {

namespace {

enum class Role { kNone, kBlue, kRed };

std::string describe(const std::optional<BcpPair>& p) {
  if (!p) return "EMPTY";
  std::ostringstream out;
  out << "(" << p->blue << ", " << p->red << ", " << p->delta << ")";
  return out.str();
}

}  // namespace

FuzzReport fuzz_wbcp(std::size_t sequences, std::size_t max_points,
                     std::size_t max_ops, std::uint64_t seed) {
  FuzzReport report;
  std::mt19937_64 rng(seed);
  const double weights[] = {0.0, 0.5, 1.0, 1.5, 2.0, 0.25};

  for (std::size_t s = 0; s < sequences; ++s) {
    const std::size_t n = 2 + rng() % (max_points - 1);
    const int lattice = 2 + static_cast<int>(rng() % 6);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back({static_cast<double>(rng() % lattice),
                     static_cast<double>(rng() % lattice) * 0.5});
    }
    const PointSet ps(pts);

    std::vector<Role> role(n, Role::kNone);
    std::vector<double> weight(n, 0.0);
    std::vector<WeightedBlue> blues;
    std::vector<PointIndex> reds;
    for (PointIndex i = 0; i < n; ++i) {
      switch (rng() % 3) {
        case 0:
          role[i] = Role::kBlue;
          weight[i] = weights[rng() % 6];
          blues.push_back({i, weight[i]});
          break;
        case 1:
          role[i] = Role::kRed;
          reds.push_back(i);
          break;
        default:
          break;
      }
    }
    WbcpIndex index(ps, blues, reds);

    const auto current = [&](Role want) {
      std::vector<PointIndex> out;
      for (PointIndex i = 0; i < n; ++i)
        if (role[i] == want) out.push_back(i);
      return out;
    };
    const auto check = [&](std::size_t step) {
      std::vector<WeightedBlue> bs;
      for (PointIndex i : current(Role::kBlue)) bs.push_back({i, weight[i]});
      const auto rs = current(Role::kRed);
      const auto want = oracle::naive_bcp(ps, bs, rs);
      const auto got = index.min_pair();
      ++report.queries;
      if (want != got) {
        if (report.mismatches++ == 0) {
          std::ostringstream why;
          why << "sequence " << s << " step " << step << ": got "
              << describe(got) << ", naive " << describe(want);
          report.first_failure = why.str();
        }
      }
    };

    const std::size_t ops = 1 + rng() % max_ops;
    check(0);
    for (std::size_t step = 1; step <= ops; ++step) {
      ++report.operations;
      const auto bs = current(Role::kBlue);
      const auto rs = current(Role::kRed);
      const auto free = current(Role::kNone);
      switch (rng() % 4) {
        case 0:
          check(step);
          break;
        case 1:
          if (!free.empty()) {
            const PointIndex i = free[rng() % free.size()];
            role[i] = Role::kBlue;
            weight[i] = weights[rng() % 6];
            index.insert_blue({i, weight[i]});
          }
          break;
        case 2:
          if (!bs.empty()) {
            const PointIndex i = bs[rng() % bs.size()];
            role[i] = Role::kNone;
            index.delete_blue(i);
          }
          break;
        default:
          if (!rs.empty()) {
            const PointIndex i = rs[rng() % rs.size()];
            role[i] = Role::kNone;
            index.delete_red(i);
          }
          break;
      }
      if (index.candidate_count() >
          WbcpIndex::kCandidateFactor * (index.blue_count() + index.red_count())) {
        ++report.residency_violations;
      }
    }
    check(ops + 1);
    ++report.sequences;
  }
  return report;
}

}  // namespace udg::testing
