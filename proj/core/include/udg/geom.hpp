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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace udg {

/// Canonical identifier of a point: its position in the input PointSet.
using PointIndex = std::uint32_t;

/// Marks "no point" in parent tables.
inline constexpr PointIndex kNoPoint = std::numeric_limits<PointIndex>::max();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool is_finite(const Point& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

/// (a.x-b.x)^2 + (a.y-b.y)^2 in double precision. Every threshold test in the
/// library goes through this function so that all components agree bit-for-bit
/// on edge membership.
inline double squared_distance(const Point& a, const Point& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Immutable, indexed set of planar points. Throws std::invalid_argument on
/// empty input or non-finite coordinates.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points)
      : PointSet(std::vector<Point>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](PointIndex i) const noexcept { return points_[i]; }
  const Point& at(PointIndex i) const;
  std::span<const Point> points() const noexcept { return points_; }

  bool contains(PointIndex i) const noexcept { return i < points_.size(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

enum class Orientation { kCW = -1, kCollinear = 0, kCCW = 1 };
enum class CirclePosition { kOutside = -1, kOn = 0, kInside = 1 };

/// Exact sign of det(b - a, c - a). Uses a floating-point filter and falls
/// back to expansion arithmetic when the filter cannot certify the sign.
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Exact position of d relative to the circle through a, b, c, independent of
/// the orientation of a, b, c. Throws std::domain_error when a, b, c are
/// collinear.
CirclePosition incircle(const Point& a, const Point& b, const Point& c,
                        const Point& d);

namespace detail {

/// Exact sign (-1, 0, +1) of the classic lifted incircle determinant. Positive
/// when d is inside the circle through a, b, c and a, b, c are
/// counter-clockwise; no orientation normalization.
int incircle_sign(const Point& a, const Point& b, const Point& c,
                  const Point& d);

int orientation_sign(const Point& a, const Point& b, const Point& c);

}  // namespace detail

}  // namespace udg
