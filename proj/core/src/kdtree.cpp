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

#include "udg/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace udg {

namespace {
constexpr std::uint32_t kNoPosition = std::numeric_limits<std::uint32_t>::max();
}  // namespace

KdTree::KdTree(const PointSet& points, std::span<const PointIndex> members,
               Mode mode)
    : points_(&points),
      order_(members.begin(), members.end()),
      axis_(members.size(), 0),
      alive_(members.size(), 1),
      subtree_alive_(members.size(), 0),
      alive_count_(members.size()),
      mode_(mode) {
  for (PointIndex id : order_) {
    if (!points.contains(id)) {
      throw std::out_of_range("kd-tree member " + std::to_string(id) +
                              " out of range");
    }
  }
  if (mode_ == Mode::kErasable) {
    position_.assign(points.size(), kNoPosition);
    for (PointIndex id : order_) {
      if (position_[id] != kNoPosition) {
        throw std::invalid_argument("kd-tree member " + std::to_string(id) +
                                    " listed twice");
      }
      position_[id] = 0;
    }
  }
  build(0, order_.size());
  if (mode_ == Mode::kErasable) index_positions();
}

void KdTree::build(std::size_t lo, std::size_t hi) {
  if (lo >= hi) return;
  const PointSet& pts = *points_;
  double min_x = pts[order_[lo]].x, max_x = min_x;
  double min_y = pts[order_[lo]].y, max_y = min_y;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const Point& p = pts[order_[i]];
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const std::uint8_t axis = (max_y - min_y) > (max_x - min_x) ? 1 : 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::nth_element(order_.begin() + lo, order_.begin() + mid,
                   order_.begin() + hi, [&](PointIndex a, PointIndex b) {
                     const double ca = axis == 0 ? pts[a].x : pts[a].y;
                     const double cb = axis == 0 ? pts[b].x : pts[b].y;
                     return ca < cb || (ca == cb && a < b);
                   });
  axis_[mid] = axis;
  subtree_alive_[mid] = static_cast<std::uint32_t>(hi - lo);
  build(lo, mid);
  build(mid + 1, hi);
}

void KdTree::index_positions() {
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    position_[order_[pos]] = static_cast<std::uint32_t>(pos);
  }
}

bool KdTree::contains(PointIndex index) const {
  if (mode_ == Mode::kErasable) {
    if (index >= position_.size()) return false;
    const std::uint32_t pos = position_[index];
    return pos != kNoPosition && alive_[pos];
  }
  return std::find(order_.begin(), order_.end(), index) != order_.end();
}

void KdTree::erase(PointIndex index) {
  if (mode_ != Mode::kErasable) {
    throw std::logic_error("erase on a static kd-tree");
  }
  if (!contains(index)) {
    throw std::invalid_argument("point " + std::to_string(index) +
                                " is not a live kd-tree member");
  }
  const std::size_t target = position_[index];
  std::size_t lo = 0;
  std::size_t hi = order_.size();
  while (true) {
    const std::size_t mid = lo + (hi - lo) / 2;
    --subtree_alive_[mid];
    if (mid == target) break;
    if (target < mid) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  alive_[target] = 0;
  position_[index] = kNoPosition;
  --alive_count_;
}

void KdTree::rebuild() {
  std::vector<PointIndex> live;
  live.reserve(alive_count_);
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    if (alive_[pos]) live.push_back(order_[pos]);
  }
  order_ = std::move(live);
  axis_.assign(order_.size(), 0);
  alive_.assign(order_.size(), 1);
  subtree_alive_.assign(order_.size(), 0);
  alive_count_ = order_.size();
  build(0, order_.size());
  if (mode_ == Mode::kErasable) index_positions();
}

}  // namespace udg
