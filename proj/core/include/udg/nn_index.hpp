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

#include <span>
#include <vector>

#include "udg/geom.hpp"
#include "udg/kdtree.hpp"

namespace udg {

/// Static nearest-neighbor index over a nonempty subset of a PointSet.
/// O(m log m) build; ties resolve to the smallest point index.
class NnIndex {
 public:
  struct Neighbor {
    PointIndex index = kNoPoint;
    double squared_distance = 0.0;
  };

  /// Throws std::invalid_argument on an empty member list and
  /// std::out_of_range on an invalid index. `points` must outlive the index.
  NnIndex(const PointSet& points, std::span<const PointIndex> members);

  Neighbor nearest(const Point& q) const;

  std::span<const PointIndex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::vector<PointIndex> members_;
  KdTree tree_;
};

inline NnIndex build_nn(const PointSet& points,
                        std::span<const PointIndex> members) {
  return NnIndex(points, members);
}

}  // namespace udg
