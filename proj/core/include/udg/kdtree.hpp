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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

/// Balanced 2-d tree over a subset of a PointSet, stored implicitly: the
/// subtree over positions [lo, hi) has its root at (lo + hi) / 2.
///
/// Members can be tombstoned with erase(); dead subtrees are skipped during
/// search and rebuild() compacts the layout. Queries minimize (key, index)
/// lexicographically, so ties always resolve to the smallest point index.
class KdTree {
 public:
  template <typename Key>
  struct Hit {
    PointIndex index = kNoPoint;
    Key key{};
  };

  enum class Mode { kStatic, kErasable };

  /// `points` must outlive the tree. kErasable keeps an O(n) position table so
  /// that erase() and contains() are O(log m).
  KdTree(const PointSet& points, std::span<const PointIndex> members,
         Mode mode = Mode::kStatic);

  std::size_t size() const noexcept { return alive_count_; }
  bool empty() const noexcept { return alive_count_ == 0; }
  std::size_t capacity() const noexcept { return order_.size(); }

  bool contains(PointIndex index) const;

  /// Tombstones a live member. Throws std::invalid_argument if `index` is not
  /// a live member, std::logic_error on a static tree.
  void erase(PointIndex index);

  /// Rebuilds over the live members only.
  void rebuild();

  /// Nearest live member by squared distance.
  std::optional<Hit<double>> nearest(const Point& q) const {
    return nearest_by(q, [](double d2) { return d2; });
  }

  /// Minimizes key(squared_distance(q, m)) over live members m. `key` must be
  /// non-decreasing in its argument; plane distances are passed through it as
  /// lower bounds for pruning.
  template <typename KeyFn>
  auto nearest_by(const Point& q, KeyFn key) const
      -> std::optional<Hit<decltype(key(0.0))>> {
    using Key = decltype(key(0.0));
    if (alive_count_ == 0) return std::nullopt;
    Hit<Key> best;
    bool found = false;
    search(q, key, 0, order_.size(), best, found);
    return best;
  }

 private:
  void build(std::size_t lo, std::size_t hi);
  void index_positions();

  template <typename KeyFn, typename Key>
  void search(const Point& q, KeyFn& key, std::size_t lo, std::size_t hi,
              Hit<Key>& best, bool& found) const {
    if (lo >= hi) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    if (subtree_alive_[mid] == 0) return;

    const PointIndex id = order_[mid];
    const Point& p = (*points_)[id];
    if (alive_[mid]) {
      const Key k = key(squared_distance(q, p));
      if (!found || k < best.key || (!(best.key < k) && id < best.index)) {
        best = {id, k};
        found = true;
      }
    }

    const double delta = axis_[mid] == 0 ? q.x - p.x : q.y - p.y;
    const bool left_first = delta <= 0.0;
    const std::size_t near_lo = left_first ? lo : mid + 1;
    const std::size_t near_hi = left_first ? mid : hi;
    const std::size_t far_lo = left_first ? mid + 1 : lo;
    const std::size_t far_hi = left_first ? hi : mid;

    search(q, key, near_lo, near_hi, best, found);
    if (!found || !(best.key < key(delta * delta))) {
      search(q, key, far_lo, far_hi, best, found);
    }
  }

  const PointSet* points_;
  std::vector<PointIndex> order_;
  std::vector<std::uint8_t> axis_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> subtree_alive_;
  std::size_t alive_count_ = 0;
  Mode mode_;
  // point index -> position in order_ (erasable trees only).
  std::vector<std::uint32_t> position_;
};

}  // namespace udg
