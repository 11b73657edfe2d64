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

#include "udg/weighted_sssp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "udg/wbcp.hpp"

namespace udg {

namespace {

void assert_no_red_near(const PointSet& points,
                        const std::vector<Color>& colors, PointIndex dead,
                        double r2) {
  for (PointIndex p = 0; p < points.size(); ++p) {
    if (colors[p] == Color::kRed &&
        squared_distance(points[p], points[dead]) <= r2) {
      throw std::logic_error("dead point " + std::to_string(dead) +
                             " still has red neighbor " + std::to_string(p));
    }
  }
}

}  // namespace

WeightedRun solve_weighted(const PointSet& points, PointIndex source,
                           const WeightedOptions& options) {
  if (!points.contains(source)) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " out of range");
  }
  const double radius = options.radius;
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("radius must be positive and finite");
  }
  const std::size_t n = points.size();
  const double r2 = radius * radius;

  WeightedRun run;
  run.traced = options.trace;
  ShortestPathTree& tree = run.tree;
  WeightedStats& stats = run.stats;
  tree.source = source;
  tree.radius = radius;
  tree.dist.assign(n, kUnreachable);
  tree.parent.assign(n, kNoPoint);
  tree.dist[source] = 0.0;
  run.colors.assign(n, Color::kRed);
  run.colors[source] = Color::kBlue;

  std::vector<PointIndex> reds;
  reds.reserve(n - 1);
  for (PointIndex p = 0; p < n; ++p) {
    if (p != source) reds.push_back(p);
  }
  const WeightedBlue start{source, 0.0};
  WbcpIndex bcp(points, std::span(&start, 1), reds);
  reds = {};

  while (bcp.red_count() > 0) {
    if (bcp.blue_count() == 0) {
      stats.stopped_disconnected = true;
      break;
    }
    const BcpPair pair = *bcp.min_pair();
    ++stats.iterations;
    const PointIndex b = pair.blue;
    const PointIndex r = pair.red;
    const double d2 = squared_distance(points[b], points[r]);
    if (d2 > r2) {
      bcp.delete_blue(b);
      if (options.check_invariants && run.colors[b] != Color::kBlue) {
        throw std::logic_error("killed a point that was not blue");
      }
      run.colors[b] = Color::kDead;
      ++stats.kills;
      if (options.check_invariants) {
        assert_no_red_near(points, run.colors, b, r2);
      }
      if (options.trace) {
        run.events.push_back({stats.iterations, ColorEvent::Kind::kKillBlue, b,
                              kNoPoint, tree.dist[b]});
      }
    } else {
      tree.dist[r] = tree.dist[b] + std::sqrt(d2);
      tree.parent[r] = b;
      bcp.delete_red(r);
      bcp.insert_blue({r, tree.dist[r]});
      if (options.check_invariants && run.colors[r] != Color::kRed) {
        throw std::logic_error("settled a point that was not red");
      }
      run.colors[r] = Color::kBlue;
      ++stats.settles;
      if (options.trace) {
        run.events.push_back({stats.iterations, ColorEvent::Kind::kSettleRed, b,
                              r, tree.dist[r]});
      }
    }
  }

  const auto& counters = bcp.counters();
  stats.bcp_ops = counters.queries + counters.updates;
  stats.peak_candidates = bcp.peak_candidate_count();
  stats.candidate_factor = WbcpIndex::kCandidateFactor;
  return run;
}

std::span<const ColorEvent> color_trace(const WeightedRun& run) {
  if (!run.traced) {
    throw std::logic_error("color_trace: run was not traced");
  }
  return run.events;
}

}  // namespace udg
