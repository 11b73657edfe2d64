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

#include "udg/unweighted_sssp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "udg/nn_index.hpp"

namespace udg {

namespace {

void check_arguments(const PointSet& points, PointIndex source,
                     double radius) {
  if (!points.contains(source)) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " out of range");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("radius must be positive and finite");
  }
}

}  // namespace

UnweightedRun solve_unweighted(const PointSet& points,
                               const DelaunayTriangulation& dt,
                               PointIndex source, double radius) {
  check_arguments(points, source, radius);
  if (dt.vertex_count() != points.size()) {
    throw std::invalid_argument("triangulation does not match the point set");
  }
  const std::size_t n = points.size();
  const double r2 = radius * radius;

  UnweightedRun run;
  ShortestPathTree& tree = run.tree;
  UnweightedStats& stats = run.stats;
  tree.source = source;
  tree.radius = radius;
  tree.dist.assign(n, kUnreachable);
  tree.parent.assign(n, kNoPoint);
  tree.dist[source] = 0.0;
  stats.dt_edges = dt.edge_count();

  std::vector<std::uint8_t> queue_entries(n, 0);
  std::deque<PointIndex> queue;
  const auto enqueue = [&](PointIndex p) {
    queue.push_back(p);
    ++queue_entries[p];
    ++stats.queue_pushes;
  };

  std::vector<PointIndex> previous{source};
  std::vector<PointIndex> current;
  for (double level = 1.0; !previous.empty(); level += 1.0) {
    const NnIndex nn(points, previous);
    ++stats.rounds;
    for (PointIndex w : previous) enqueue(w);
    current.clear();

    while (!queue.empty()) {
      const PointIndex q = queue.front();
      queue.pop_front();
      for (PointIndex p : dt.neighbors(q)) {
        ++stats.edge_inspections;
        if (tree.dist[p] != kUnreachable) continue;
        const NnIndex::Neighbor w = nn.nearest(points[p]);
        ++stats.nn_queries;
        if (w.squared_distance <= r2) {
          tree.dist[p] = level;
          tree.parent[p] = w.index;
          enqueue(p);
          current.push_back(p);
        }
      }
    }
    previous.swap(current);
  }

  stats.max_queue_entries_per_point =
      *std::max_element(queue_entries.begin(), queue_entries.end());
  return run;
}

UnweightedRun solve_unweighted(const PointSet& points, PointIndex source,
                               double radius) {
  check_arguments(points, source, radius);
  return solve_unweighted(points, build_delaunay(points), source, radius);
}

}  // namespace udg
