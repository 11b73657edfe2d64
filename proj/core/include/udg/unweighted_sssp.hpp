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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "udg/delaunay.hpp"
#include "udg/geom.hpp"
#include "udg/shortest_path_tree.hpp"

namespace udg {

/// Work counters of one unweighted solve.
struct UnweightedStats {
  std::size_t rounds = 0;            // nearest-neighbor indexes built
  std::size_t edge_inspections = 0;  // Delaunay edges scanned from the queue
  std::size_t nn_queries = 0;
  std::size_t dt_edges = 0;
  std::size_t queue_pushes = 0;
  std::uint8_t max_queue_entries_per_point = 0;
};

struct UnweightedRun {
  ShortestPathTree tree;
  UnweightedStats stats;
};

/// Hop-count shortest path tree from `source` in the graph joining points at
/// distance <= radius, without building that graph.
///
/// Rounds grow level i from level i-1: every point of level i-1 seeds a FIFO
/// queue of candidates, each dequeued point offers its Delaunay neighbors, and
/// a neighbor p joins level i when it is still unlabelled and its nearest point
/// in level i-1 lies within the radius. That nearest point becomes its parent.
///
/// Throws std::out_of_range on an invalid source and std::invalid_argument on
/// a non-positive or non-finite radius.
UnweightedRun solve_unweighted(const PointSet& points,
                               const DelaunayTriangulation& dt,
                               PointIndex source, double radius = 1.0);

UnweightedRun solve_unweighted(const PointSet& points, PointIndex source,
                               double radius = 1.0);

inline ShortestPathTree unweighted_sssp(const PointSet& points,
                                        PointIndex source,
                                        double radius = 1.0) {
  return solve_unweighted(points, source, radius).tree;
}

}  // namespace udg
