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
#include <span>
#include <vector>

#include "udg/geom.hpp"
#include "udg/shortest_path_tree.hpp"

namespace udg {

enum class Color : std::uint8_t { kRed, kBlue, kDead };

/// One step of the main loop: either the closest blue was too far from every
/// red and died, or its closest red was settled through it.
struct ColorEvent {
  enum class Kind : std::uint8_t { kKillBlue, kSettleRed };

  std::size_t iteration = 0;
  Kind kind = Kind::kKillBlue;
  PointIndex blue = kNoPoint;
  PointIndex red = kNoPoint;  // kNoPoint for kKillBlue
  double dist = 0.0;          // dist[red] for kSettleRed, dist[blue] otherwise

  friend bool operator==(const ColorEvent&, const ColorEvent&) = default;
};

struct WeightedOptions {
  double radius = 1.0;
  bool trace = false;
  /// Runs O(n) linear-scan assertions after every kill (no red within the
  /// radius of the dead point) and checks colour transitions; throws
  /// std::logic_error on a violation. Quadratic; for tests.
  bool check_invariants = false;
};

struct WeightedStats {
  std::size_t iterations = 0;
  std::size_t kills = 0;
  std::size_t settles = 0;
  std::size_t bcp_ops = 0;  // closest pair queries plus updates
  bool stopped_disconnected = false;
  /// Peak pairwise candidates held by the closest pair structure.
  std::size_t peak_candidates = 0;
  /// Bound declared by the structure: candidates <= factor * n.
  std::size_t candidate_factor = 0;
};

struct WeightedRun {
  ShortestPathTree tree;
  WeightedStats stats;
  std::vector<Color> colors;
  std::vector<ColorEvent> events;  // filled when traced
  bool traced = false;
};

/// Euclidean-weighted shortest path tree from `source` in the graph joining
/// points at distance <= radius, without building that graph.
///
/// Settled points are blue while they may still have an edge to an unsettled
/// (red) point and dead afterwards. Each iteration asks the closest pair
/// structure for the blue/red pair minimizing dist[b] + |r - b|: if that pair
/// is not an edge the blue dies, otherwise the red is settled through it and
/// turns blue. Stops early when no blue remains.
///
/// Throws std::out_of_range on an invalid source and std::invalid_argument on
/// a non-positive or non-finite radius.
WeightedRun solve_weighted(const PointSet& points, PointIndex source,
                           const WeightedOptions& options = {});

inline ShortestPathTree weighted_sssp(const PointSet& points,
                                      PointIndex source, double radius = 1.0) {
  return solve_weighted(points, source, {.radius = radius}).tree;
}

/// Event log of a traced run. Throws std::logic_error if the run was not
/// traced.
std::span<const ColorEvent> color_trace(const WeightedRun& run);

}  // namespace udg
