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

#include "udg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace udg::oracle {

ExplicitGraph ExplicitGraph::from_pairs(
    const PointSet& points, double radius,
    std::vector<std::pair<PointIndex, PointIndex>> pairs) {
  const std::size_t n = points.size();
  ExplicitGraph g;
  g.radius_ = radius;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : pairs) {
    ++g.offsets_[a + 1];
    ++g.offsets_[b + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.arcs_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : pairs) {
    const double w = std::sqrt(squared_distance(points[a], points[b]));
    g.arcs_[cursor[a]++] = {b, w};
    g.arcs_[cursor[b]++] = {a, w};
  }
  pairs = {};
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.arcs_.begin() + g.offsets_[v], g.arcs_.begin() + g.offsets_[v + 1],
              [](const Arc& x, const Arc& y) { return x.to < y.to; });
  }
  return g;
}

ExplicitGraph build_explicit(const PointSet& points, double radius) {
  const double r2 = radius * radius;
  std::vector<std::pair<PointIndex, PointIndex>> pairs;
  for (PointIndex p = 0; p < points.size(); ++p) {
    for (PointIndex q = p + 1; q < points.size(); ++q) {
      if (squared_distance(points[p], points[q]) <= r2) pairs.emplace_back(p, q);
    }
  }
  return ExplicitGraph::from_pairs(points, radius, std::move(pairs));
}

namespace {

// Uniform grid with cells slightly wider than r, so that any pair passing the
// floating-point threshold test lies in the same or adjacent cells.
class CellGrid {
 public:
  CellGrid(const PointSet& points, double radius)
      : points_(points), cell_(radius * (1.0 + 1e-9)) {
    order_.resize(points.size());
    std::iota(order_.begin(), order_.end(), PointIndex{0});
    keys_.resize(points.size());
    for (PointIndex p = 0; p < points.size(); ++p) keys_[p] = key_of(points[p]);
    std::sort(order_.begin(), order_.end(), [&](PointIndex a, PointIndex b) {
      return keys_[a] < keys_[b] || (keys_[a] == keys_[b] && a < b);
    });
    for (std::size_t i = 0; i < order_.size();) {
      std::size_t j = i;
      while (j < order_.size() && keys_[order_[j]] == keys_[order_[i]]) ++j;
      ranges_.emplace(keys_[order_[i]], std::make_pair(i, j));
      i = j;
    }
  }

  // Calls visit(p, q) once for every unordered pair p < q in adjacent cells
  // with squared_distance <= r2.
  template <typename Visit>
  void for_each_close_pair(double r2, Visit&& visit) const {
    for (PointIndex p = 0; p < points_.size(); ++p) {
      const auto [cx, cy] = cell_of(points_[p]);
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          const auto it = ranges_.find(pack(cx + dx, cy + dy));
          if (it == ranges_.end()) continue;
          for (std::size_t k = it->second.first; k < it->second.second; ++k) {
            const PointIndex q = order_[k];
            if (q > p && squared_distance(points_[p], points_[q]) <= r2) {
              visit(p, q);
            }
          }
        }
      }
    }
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(const Point& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
            static_cast<std::int64_t>(std::floor(p.y / cell_))};
  }
  static std::uint64_t pack(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^
           (static_cast<std::uint64_t>(cy) & 0xffffffffu);
  }
  std::uint64_t key_of(const Point& p) const {
    const auto [cx, cy] = cell_of(p);
    return pack(cx, cy);
  }

  const PointSet& points_;
  double cell_;
  std::vector<PointIndex> order_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> ranges_;
};

void check_source(const ExplicitGraph& graph, PointIndex source) {
  if (source >= graph.vertex_count()) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " out of range");
  }
}

ShortestPathTree empty_tree(const ExplicitGraph& graph, PointIndex source) {
  ShortestPathTree tree;
  tree.source = source;
  tree.radius = graph.radius();
  tree.dist.assign(graph.vertex_count(), kUnreachable);
  tree.parent.assign(graph.vertex_count(), kNoPoint);
  tree.dist[source] = 0.0;
  return tree;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

ExplicitGraph build_explicit_bucketed(const PointSet& points, double radius) {
  std::vector<std::pair<PointIndex, PointIndex>> pairs;
  CellGrid(points, radius)
      .for_each_close_pair(radius * radius, [&](PointIndex p, PointIndex q) {
        pairs.emplace_back(p, q);
      });
  return ExplicitGraph::from_pairs(points, radius, std::move(pairs));
}

std::size_t count_edges_bucketed(const PointSet& points, double radius) {
  std::size_t count = 0;
  CellGrid(points, radius)
      .for_each_close_pair(radius * radius,
                           [&](PointIndex, PointIndex) { ++count; });
  return count;
}

ShortestPathTree bfs_oracle(const ExplicitGraph& graph, PointIndex source) {
  check_source(graph, source);
  ShortestPathTree tree = empty_tree(graph, source);
  std::queue<PointIndex> queue;
  queue.push(source);
  while (!queue.empty()) {
    const PointIndex u = queue.front();
    queue.pop();
    for (const auto& arc : graph.neighbors(u)) {
      if (tree.dist[arc.to] != kUnreachable) continue;
      tree.dist[arc.to] = tree.dist[u] + 1.0;
      tree.parent[arc.to] = u;
      queue.push(arc.to);
    }
  }
  return tree;
}

ShortestPathTree dijkstra_oracle(const ExplicitGraph& graph,
                                 PointIndex source) {
  check_source(graph, source);
  ShortestPathTree tree = empty_tree(graph, source);
  using Entry = std::pair<double, PointIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<bool> done(graph.vertex_count(), false);
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& arc : graph.neighbors(u)) {
      const double nd = d + arc.weight;
      if (!done[arc.to] && nd < tree.dist[arc.to]) {
        tree.dist[arc.to] = nd;
        tree.parent[arc.to] = u;
        heap.emplace(nd, arc.to);
      }
    }
  }
  return tree;
}

std::vector<PointIndex> connected_from(const ExplicitGraph& graph,
                                       PointIndex source) {
  check_source(graph, source);
  UnionFind uf(graph.vertex_count());
  for (PointIndex v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& arc : graph.neighbors(v)) uf.unite(v, arc.to);
  }
  const std::size_t root = uf.find(source);
  std::vector<PointIndex> out;
  for (PointIndex v = 0; v < graph.vertex_count(); ++v) {
    if (uf.find(v) == root) out.push_back(v);
  }
  return out;
}

std::optional<BcpPair> naive_bcp(const PointSet& points,
                                 std::span<const WeightedBlue> blues,
                                 std::span<const PointIndex> reds) {
  std::optional<BcpPair> best;
  for (const WeightedBlue& b : blues) {
    for (PointIndex r : reds) {
      const BcpPair candidate{
          b.index, r, weighted_distance(b.weight, points.at(r), points.at(b.index))};
      if (!best || pair_less(candidate, *best)) best = candidate;
    }
  }
  return best;
}

namespace {

constexpr int kMaxAttemptsPerPoint = 1000;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// Rejects points whose squared distance to an accepted point is within the
// margin of r^2.
class MarginGuard {
 public:
  MarginGuard(double radius, double margin)
      : r2_(radius * radius), margin_(margin), cell_(radius * 1.5) {}

  bool admissible(const Point& p) const {
    if (margin_ <= 0.0) return true;
    const auto [cx, cy] = cell_of(p);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = cells_.find(pack(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const Point& q : it->second) {
          if (std::abs(squared_distance(p, q) - r2_) < margin_) return false;
        }
      }
    }
    return true;
  }

  void accept(const Point& p) {
    const auto [cx, cy] = cell_of(p);
    cells_[pack(cx, cy)].push_back(p);
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(const Point& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
            static_cast<std::int64_t>(std::floor(p.y / cell_))};
  }
  static std::uint64_t pack(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^
           (static_cast<std::uint64_t>(cy) & 0xffffffffu);
  }

  double r2_;
  double margin_;
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<Point>> cells_;
};

}  // namespace

PointSet generate(const GenSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("generate: n must be >= 1");
  if (!(spec.side > 0.0) || !std::isfinite(spec.side)) {
    throw std::invalid_argument("generate: side must be positive");
  }
  if (!(spec.radius > 0.0)) {
    throw std::invalid_argument("generate: radius must be positive");
  }
  std::mt19937_64 rng(spec.seed);
  MarginGuard guard(spec.radius, spec.min_threshold_margin);
  std::vector<Point> out;
  out.reserve(spec.n);

  if (spec.shape == Shape::kGrid) {
    const auto columns =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
    const double step = spec.side / static_cast<double>(columns);
    for (std::size_t k = 0; k < spec.n; ++k) {
      const Point p{(static_cast<double>(k % columns) + 0.5) * step,
                    (static_cast<double>(k / columns) + 0.5) * step};
      if (!guard.admissible(p)) {
        throw std::runtime_error(
            "generate: grid spacing puts point pairs within the threshold "
            "margin of the radius");
      }
      guard.accept(p);
      out.push_back(p);
    }
    return PointSet(std::move(out));
  }

  std::vector<Point> centres;
  const double cluster_radius = spec.side / 10.0;
  if (spec.shape == Shape::kClusters) {
    const std::size_t count = std::max<std::size_t>(1, spec.n / 50);
    for (std::size_t c = 0; c < count; ++c) {
      centres.push_back({uniform01(rng) * spec.side, uniform01(rng) * spec.side});
    }
  }

  const auto draw = [&]() -> Point {
    switch (spec.shape) {
      case Shape::kUniformSquare:
        return {uniform01(rng) * spec.side, uniform01(rng) * spec.side};
      case Shape::kCollinear: {
        const double x = uniform01(rng) * spec.side;
        return {x, x * 0.5};
      }
      case Shape::kClusters: {
        const Point& c = centres[rng() % centres.size()];
        const double angle = 2.0 * std::numbers::pi * uniform01(rng);
        const double rho = cluster_radius * std::sqrt(uniform01(rng));
        return {std::clamp(c.x + rho * std::cos(angle), 0.0, spec.side),
                std::clamp(c.y + rho * std::sin(angle), 0.0, spec.side)};
      }
      case Shape::kGrid:
        break;
    }
    throw std::logic_error("unreachable shape");
  };

  for (std::size_t k = 0; k < spec.n; ++k) {
    int attempt = 0;
    Point p = draw();
    while (!guard.admissible(p)) {
      if (++attempt >= kMaxAttemptsPerPoint) {
        throw std::runtime_error(
            "generate: could not place point " + std::to_string(k) +
            " outside the threshold margin");
      }
      p = draw();
    }
    guard.accept(p);
    out.push_back(p);
  }
  return PointSet(std::move(out));
}

std::optional<Shape> parse_shape(std::string_view name) {
  if (name == "uniform") return Shape::kUniformSquare;
  if (name == "grid") return Shape::kGrid;
  if (name == "clusters") return Shape::kClusters;
  if (name == "collinear") return Shape::kCollinear;
  return std::nullopt;
}

std::string_view shape_name(Shape shape) {
  switch (shape) {
    case Shape::kUniformSquare:
      return "uniform";
    case Shape::kGrid:
      return "grid";
    case Shape::kClusters:
      return "clusters";
    case Shape::kCollinear:
      return "collinear";
  }
  return "unknown";
}

double side_for_degree(std::size_t n, double degree, double radius) {
  if (!(degree > 0.0)) throw std::invalid_argument("degree must be positive");
  const double others = static_cast<double>(std::max<std::size_t>(n, 2) - 1);
  return radius * std::sqrt(std::numbers::pi * others / degree);
}

}  // namespace udg::oracle
