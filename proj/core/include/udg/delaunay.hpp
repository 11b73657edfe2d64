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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

/// Vertex-adjacency view of the Delaunay triangulation of a point set.
///
/// Degenerate inputs follow fixed rules:
///  - all-collinear sets (including n = 2) give the path graph through the
///    points sorted along the line;
///  - duplicate points are attached as pendant vertices to the smallest index
///    at the same location, giving a zero-length edge;
///  - when four or more points are cocircular, every diagonal choice inside the
///    cocircular polygon is a valid completion; the one with the
///    lexicographically smaller (min index, max index) pair wins each flip.
///
/// Adjacency lists are sorted ascending and stored in one contiguous array.
class DelaunayTriangulation {
 public:
  DelaunayTriangulation() = default;

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  /// Throws std::out_of_range on an invalid index.
  std::span<const PointIndex> neighbors(PointIndex i) const;

  std::size_t degree(PointIndex i) const { return neighbors(i).size(); }

  /// Counter-clockwise triangles of the triangulation over the distinct
  /// points, one entry per bounded face. Empty for collinear inputs.
  std::span<const std::array<PointIndex, 3>> triangles() const noexcept {
    return triangles_;
  }

 private:
  friend DelaunayTriangulation build_delaunay(const PointSet& points);

  std::vector<std::size_t> offsets_{0};
  std::vector<PointIndex> adjacency_;
  std::vector<std::array<PointIndex, 3>> triangles_;
};

/// O(n log n) divide and conquer with exact predicates.
DelaunayTriangulation build_delaunay(const PointSet& points);

}  // namespace udg
