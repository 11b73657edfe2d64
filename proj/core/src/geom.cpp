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

#include "udg/geom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace udg {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("point set must contain at least one point");
  }
  if (points_.size() >= static_cast<std::size_t>(kNoPoint)) {
    throw std::invalid_argument("point set too large");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!is_finite(points_[i])) {
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " has a non-finite coordinate");
    }
  }
}

const Point& PointSet::at(PointIndex i) const {
  if (!contains(i)) {
    throw std::out_of_range("point index " + std::to_string(i) +
                            " out of range (n = " +
                            std::to_string(points_.size()) + ")");
  }
  return points_[i];
}

namespace {

// Nonoverlapping floating-point expansions, components ordered by increasing
// magnitude, zero components eliminated. Only used on the slow path when the
// static filters below cannot certify a sign.
using Expansion = std::vector<double>;

constexpr double kEpsilon = 0x1p-53;
constexpr double kOrientErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIncircleErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

inline void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& prod, double& err) {
  prod = a * b;
  err = std::fma(a, b, -prod);
}

Expansion grow(const Expansion& e, double b) {
  Expansion out;
  out.reserve(e.size() + 1);
  double q = b;
  for (double component : e) {
    double sum, err;
    two_sum(q, component, sum, err);
    if (err != 0.0) out.push_back(err);
    q = sum;
  }
  if (q != 0.0 || out.empty()) out.push_back(q);
  return out;
}

Expansion add(const Expansion& e, const Expansion& f) {
  Expansion out = e;
  for (double component : f) out = grow(out, component);
  return out;
}

Expansion negate(Expansion e) {
  for (double& component : e) component = -component;
  return e;
}

Expansion multiply(const Expansion& e, const Expansion& f) {
  Expansion out{0.0};
  for (double a : e) {
    for (double b : f) {
      double prod, err;
      two_product(a, b, prod, err);
      if (err != 0.0) out = grow(out, err);
      out = grow(out, prod);
    }
  }
  return out;
}

Expansion difference(double a, double b) {
  double sum, err;
  two_sum(a, -b, sum, err);
  if (err == 0.0) return {sum};
  return {err, sum};
}

int sign(const Expansion& e) {
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

int orientation_exact(const Point& a, const Point& b, const Point& c) {
  const Expansion left = multiply(difference(a.x, c.x), difference(b.y, c.y));
  const Expansion right = multiply(difference(a.y, c.y), difference(b.x, c.x));
  return sign(add(left, negate(right)));
}

int incircle_exact(const Point& a, const Point& b, const Point& c,
                   const Point& d) {
  const Expansion adx = difference(a.x, d.x);
  const Expansion ady = difference(a.y, d.y);
  const Expansion bdx = difference(b.x, d.x);
  const Expansion bdy = difference(b.y, d.y);
  const Expansion cdx = difference(c.x, d.x);
  const Expansion cdy = difference(c.y, d.y);

  const auto lift = [](const Expansion& dx, const Expansion& dy) {
    return add(multiply(dx, dx), multiply(dy, dy));
  };
  const auto cross = [](const Expansion& ux, const Expansion& uy,
                        const Expansion& vx, const Expansion& vy) {
    return add(multiply(ux, vy), negate(multiply(vx, uy)));
  };

  const Expansion det =
      add(add(multiply(lift(adx, ady), cross(bdx, bdy, cdx, cdy)),
              multiply(lift(bdx, bdy), cross(cdx, cdy, adx, ady))),
          multiply(lift(cdx, cdy), cross(adx, ady, bdx, bdy)));
  return sign(det);
}

}  // namespace

namespace detail {

int orientation_sign(const Point& a, const Point& b, const Point& c) {
  // Repeated points give an exactly zero determinant that no filter certifies.
  if (a == b || b == c || a == c) return 0;
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = kOrientErrBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orientation_exact(a, b, c);
}

int incircle_sign(const Point& a, const Point& b, const Point& c,
                  const Point& d) {
  if (a == d || b == d || c == d || a == b || b == c || a == c) return 0;
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent =
      (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
      (std::abs(cdxady) + std::abs(adxcdy)) * blift +
      (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleErrBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

}  // namespace detail

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  return static_cast<Orientation>(detail::orientation_sign(a, b, c));
}

CirclePosition incircle(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  const int orient = detail::orientation_sign(a, b, c);
  if (orient == 0) {
    throw std::domain_error("incircle: a, b, c are collinear");
  }
  return static_cast<CirclePosition>(orient *
                                     detail::incircle_sign(a, b, c, d));
}

}  // namespace udg
