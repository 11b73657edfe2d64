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
#include <limits>
#include <string>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Distance and parent tables of a single-source shortest path tree.
/// Unreachable points have dist = kUnreachable and parent = kNoPoint; so does
/// the source's parent.
struct ShortestPathTree {
  PointIndex source = kNoPoint;
  double radius = 1.0;
  std::vector<double> dist;
  std::vector<PointIndex> parent;

  std::size_t size() const noexcept { return dist.size(); }
  bool reachable(PointIndex p) const { return dist[p] != kUnreachable; }
  std::size_t reachable_count() const;
};

/// Points at hop distance exactly `level` from the source.
struct LevelSet {
  std::size_t level = 0;
  std::vector<PointIndex> members;

  friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

/// Groups the reachable points of a hop-count tree by distance, members in
/// ascending index order. Throws std::invalid_argument when a finite distance
/// is not a nonnegative integer.
std::vector<LevelSet> levels(const ShortestPathTree& tree);

/// Structural checks shared by the solvers' tests and the verify command.
/// Returns an empty string when the tree is valid, otherwise a description of
/// the first violation found:
///  - dist[source] = 0 and parent[source] = none;
///  - finite dist <=> parent set (for p != source);
///  - each parent edge has squared length <= radius^2;
///  - parent chains reach the source without cycles;
///  - |dist[p] - dist[parent] - edge_weight(p, parent)| <= tolerance, where
///    edge_weight is 1 (hop trees) or the Euclidean length (weighted trees).
std::string validate_tree(const PointSet& points, const ShortestPathTree& tree,
                          bool weighted, double tolerance);

}  // namespace udg
