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

#include "udg/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace udg {

std::span<const PointIndex> DelaunayTriangulation::neighbors(
    PointIndex i) const {
  if (i >= vertex_count()) {
    throw std::out_of_range("delaunay vertex " + std::to_string(i) +
                            " out of range");
  }
  return std::span<const PointIndex>(adjacency_).subspan(
      offsets_[i], offsets_[i + 1] - offsets_[i]);
}

namespace {

// Quad-edge arena (Guibas & Stolfi). An edge handle is 4 * quad + rotation;
// even rotations are primal edges and carry an origin vertex.
class QuadEdgeMesh {
 public:
  using Edge = std::uint32_t;

  explicit QuadEdgeMesh(const PointSet& points) : points_(points) {}

  static Edge rot(Edge e) { return (e & ~3u) | ((e + 1) & 3u); }
  static Edge sym(Edge e) { return (e & ~3u) | ((e + 2) & 3u); }
  static Edge rot_inv(Edge e) { return (e & ~3u) | ((e + 3) & 3u); }

  Edge onext(Edge e) const { return next_[e]; }
  Edge oprev(Edge e) const { return rot(onext(rot(e))); }
  Edge lnext(Edge e) const { return rot(onext(rot_inv(e))); }
  Edge rprev(Edge e) const { return onext(sym(e)); }

  PointIndex org(Edge e) const { return origin_[e]; }
  PointIndex dest(Edge e) const { return origin_[sym(e)]; }
  const Point& org_point(Edge e) const { return points_[org(e)]; }
  const Point& dest_point(Edge e) const { return points_[dest(e)]; }

  Edge make_edge(PointIndex from, PointIndex to) {
    const Edge e = static_cast<Edge>(next_.size());
    next_.insert(next_.end(), {e, e + 3, e + 2, e + 1});
    origin_.insert(origin_.end(), {from, kNoPoint, to, kNoPoint});
    alive_.push_back(true);
    return e;
  }

  void splice(Edge a, Edge b) {
    const Edge alpha = rot(onext(a));
    const Edge beta = rot(onext(b));
    std::swap(next_[a], next_[b]);
    std::swap(next_[alpha], next_[beta]);
  }

  Edge connect(Edge a, Edge b) {
    const Edge e = make_edge(dest(a), org(b));
    splice(e, lnext(a));
    splice(sym(e), b);
    return e;
  }

  void remove(Edge e) {
    splice(e, oprev(e));
    splice(sym(e), oprev(sym(e)));
    alive_[e >> 2] = false;
  }

  // Replaces e, the diagonal of the quadrilateral formed by its two incident
  // triangles, with the other diagonal.
  void flip(Edge e) {
    const Edge a = oprev(e);
    const Edge b = oprev(sym(e));
    splice(e, a);
    splice(sym(e), b);
    splice(e, lnext(a));
    splice(sym(e), lnext(b));
    origin_[e] = dest(a);
    origin_[sym(e)] = dest(b);
  }

  bool alive(std::uint32_t quad) const { return alive_[quad]; }
  std::size_t quad_count() const { return alive_.size(); }

  bool ccw(PointIndex a, PointIndex b, PointIndex c) const {
    return detail::orientation_sign(points_[a], points_[b], points_[c]) > 0;
  }
  bool right_of(PointIndex x, Edge e) const { return ccw(x, dest(e), org(e)); }
  bool left_of(PointIndex x, Edge e) const { return ccw(x, org(e), dest(e)); }
  bool in_circle(PointIndex a, PointIndex b, PointIndex c, PointIndex d) const {
    return detail::incircle_sign(points_[a], points_[b], points_[c],
                                 points_[d]) > 0;
  }

  // True when the left face of e is a counter-clockwise triangle.
  bool left_is_triangle(Edge e) const {
    const Edge e1 = lnext(e);
    const Edge e2 = lnext(e1);
    return lnext(e2) == e && ccw(org(e), dest(e), dest(e1));
  }

 private:
  const PointSet& points_;
  std::vector<Edge> next_;
  std::vector<PointIndex> origin_;
  std::vector<bool> alive_;
};

using Edge = QuadEdgeMesh::Edge;

struct Hull {
  Edge left;   // counter-clockwise edge out of the leftmost vertex
  Edge right;  // clockwise edge out of the rightmost vertex
};

// `sorted` holds distinct point indices in lexicographic (x, y) order.
Hull triangulate(QuadEdgeMesh& mesh, std::span<const PointIndex> sorted) {
  if (sorted.size() == 2) {
    const Edge a = mesh.make_edge(sorted[0], sorted[1]);
    return {a, QuadEdgeMesh::sym(a)};
  }
  if (sorted.size() == 3) {
    const PointIndex p0 = sorted[0], p1 = sorted[1], p2 = sorted[2];
    const Edge a = mesh.make_edge(p0, p1);
    const Edge b = mesh.make_edge(p1, p2);
    mesh.splice(QuadEdgeMesh::sym(a), b);
    if (mesh.ccw(p0, p1, p2)) {
      mesh.connect(b, a);
      return {a, QuadEdgeMesh::sym(b)};
    }
    if (mesh.ccw(p0, p2, p1)) {
      const Edge c = mesh.connect(b, a);
      return {QuadEdgeMesh::sym(c), c};
    }
    return {a, QuadEdgeMesh::sym(b)};
  }

  const std::size_t half = sorted.size() / 2;
  auto [ldo, ldi] = triangulate(mesh, sorted.first(half));
  auto [rdi, rdo] = triangulate(mesh, sorted.subspan(half));

  // Lower common tangent.
  while (true) {
    if (mesh.left_of(mesh.org(rdi), ldi)) {
      ldi = mesh.lnext(ldi);
    } else if (mesh.right_of(mesh.org(ldi), rdi)) {
      rdi = mesh.rprev(rdi);
    } else {
      break;
    }
  }

  Edge basel = mesh.connect(QuadEdgeMesh::sym(rdi), ldi);
  if (mesh.org(ldi) == mesh.org(ldo)) ldo = QuadEdgeMesh::sym(basel);
  if (mesh.org(rdi) == mesh.org(rdo)) rdo = basel;

  const auto valid = [&](Edge e) { return mesh.right_of(mesh.dest(e), basel); };

  // Zip the two halves together bottom to top.
  while (true) {
    Edge lcand = mesh.onext(QuadEdgeMesh::sym(basel));
    if (valid(lcand)) {
      while (mesh.in_circle(mesh.dest(basel), mesh.org(basel), mesh.dest(lcand),
                            mesh.dest(mesh.onext(lcand)))) {
        const Edge t = mesh.onext(lcand);
        mesh.remove(lcand);
        lcand = t;
      }
    }
    Edge rcand = mesh.oprev(basel);
    if (valid(rcand)) {
      while (mesh.in_circle(mesh.dest(basel), mesh.org(basel), mesh.dest(rcand),
                            mesh.dest(mesh.oprev(rcand)))) {
        const Edge t = mesh.oprev(rcand);
        mesh.remove(rcand);
        rcand = t;
      }
    }
    const bool lvalid = valid(lcand);
    const bool rvalid = valid(rcand);
    if (!lvalid && !rvalid) break;
    if (!lvalid ||
        (rvalid && mesh.in_circle(mesh.dest(lcand), mesh.org(lcand),
                                  mesh.org(rcand), mesh.dest(rcand)))) {
      basel = mesh.connect(rcand, QuadEdgeMesh::sym(basel));
    } else {
      basel = mesh.connect(QuadEdgeMesh::sym(basel), QuadEdgeMesh::sym(lcand));
    }
  }
  return {ldo, rdo};
}

std::pair<PointIndex, PointIndex> edge_key(PointIndex a, PointIndex b) {
  return std::minmax(a, b);
}

// Flips every cocircular diagonal towards the lexicographically smaller one,
// comparing original indices through `ids`. Each flip strictly decreases the
// sorted edge multiset, so this terminates.
void normalize_cocircular(QuadEdgeMesh& mesh, const PointSet& points,
                          std::span<const PointIndex> ids) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t q = 0; q < mesh.quad_count(); ++q) {
      if (!mesh.alive(q)) continue;
      const Edge e = q * 4;
      if (!mesh.left_is_triangle(e) ||
          !mesh.left_is_triangle(QuadEdgeMesh::sym(e))) {
        continue;
      }
      const PointIndex a = mesh.org(e);
      const PointIndex b = mesh.dest(e);
      const PointIndex c = mesh.dest(mesh.lnext(e));
      const PointIndex d = mesh.dest(mesh.lnext(QuadEdgeMesh::sym(e)));
      if (detail::incircle_sign(points[a], points[b], points[c], points[d]) !=
          0) {
        continue;
      }
      if (edge_key(ids[c], ids[d]) < edge_key(ids[a], ids[b])) {
        mesh.flip(e);
        changed = true;
      }
    }
  }
}

}  // namespace

DelaunayTriangulation build_delaunay(const PointSet& points) {
  const std::size_t n = points.size();

  std::vector<PointIndex> order(n);
  for (PointIndex i = 0; i < n; ++i) order[i] = i;
  const auto lex_less = [&](PointIndex a, PointIndex b) {
    const Point& p = points[a];
    const Point& q = points[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  };
  std::sort(order.begin(), order.end(), lex_less);

  // Collapse duplicates onto the smallest index at each location; that index
  // sorts first within its run.
  std::vector<PointIndex> distinct;
  std::vector<std::pair<PointIndex, PointIndex>> edges;
  distinct.reserve(n);
  for (PointIndex i : order) {
    if (!distinct.empty() && points[distinct.back()] == points[i]) {
      edges.emplace_back(distinct.back(), i);
    } else {
      distinct.push_back(i);
    }
  }

  DelaunayTriangulation dt;
  if (distinct.size() >= 2) {
    // The mesh works on a sorted copy so that each recursive half touches a
    // contiguous block of coordinates; distinct[] maps back.
    std::vector<Point> sorted_points;
    sorted_points.reserve(distinct.size());
    for (PointIndex i : distinct) sorted_points.push_back(points[i]);
    const PointSet local(std::move(sorted_points));
    std::vector<PointIndex> local_ids(distinct.size());
    for (PointIndex i = 0; i < local_ids.size(); ++i) local_ids[i] = i;

    QuadEdgeMesh mesh(local);
    triangulate(mesh, local_ids);
    normalize_cocircular(mesh, local, distinct);
    for (std::uint32_t q = 0; q < mesh.quad_count(); ++q) {
      if (!mesh.alive(q)) continue;
      const Edge e = q * 4;
      edges.emplace_back(distinct[mesh.org(e)], distinct[mesh.dest(e)]);
      for (const Edge side : {e, QuadEdgeMesh::sym(e)}) {
        if (!mesh.left_is_triangle(side)) continue;
        const PointIndex a = distinct[mesh.org(side)];
        const PointIndex b = distinct[mesh.dest(side)];
        const PointIndex c = distinct[mesh.dest(mesh.lnext(side))];
        // Report each triangle once, from its smallest vertex.
        if (a < b && a < c) dt.triangles_.push_back({a, b, c});
      }
    }
    std::sort(dt.triangles_.begin(), dt.triangles_.end());
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  dt.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    dt.offsets_[i + 1] = dt.offsets_[i] + degree[i];
  }
  dt.adjacency_.resize(dt.offsets_[n]);
  std::vector<std::size_t> cursor(dt.offsets_.begin(), dt.offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    dt.adjacency_[cursor[a]++] = b;
    dt.adjacency_[cursor[b]++] = a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(dt.adjacency_.begin() + dt.offsets_[i],
              dt.adjacency_.begin() + dt.offsets_[i + 1]);
  }
  return dt;
}

}  // namespace udg
