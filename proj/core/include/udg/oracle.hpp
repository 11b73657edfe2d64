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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "udg/geom.hpp"
#include "udg/shortest_path_tree.hpp"
#include "udg/wbcp.hpp"

/// Brute-force references and instance generation. Nothing here is used by the
/// solvers; these are the baselines they are checked against.
namespace udg::oracle {

/// G_{<=r}(P) with an explicit, symmetric adjacency list per vertex (CSR).
/// Edge (p, q), p != q, exists iff squared_distance(p, q) <= r^2.
class ExplicitGraph {
 public:
  struct Arc {
    PointIndex to;
    double weight;  // Euclidean length
  };

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return arcs_.size() / 2; }
  double radius() const noexcept { return radius_; }
  std::span<const Arc> neighbors(PointIndex v) const {
    return std::span<const Arc>(arcs_).subspan(offsets_[v],
                                               offsets_[v + 1] - offsets_[v]);
  }

 private:
  friend ExplicitGraph build_explicit(const PointSet&, double);
  friend ExplicitGraph build_explicit_bucketed(const PointSet&, double);
  static ExplicitGraph from_pairs(
      const PointSet& points, double radius,
      std::vector<std::pair<PointIndex, PointIndex>> pairs);

  double radius_ = 1.0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

/// Double loop over all pairs; O(n^2).
ExplicitGraph build_explicit(const PointSet& points, double radius = 1.0);

/// Same graph via a uniform grid with cell side r; O(n + |E|) expected.
/// Adjacency order is identical to build_explicit (ascending neighbor).
ExplicitGraph build_explicit_bucketed(const PointSet& points,
                                      double radius = 1.0);

/// |E(G_{<=r})| counted on the grid without storing edges.
std::size_t count_edges_bucketed(const PointSet& points, double radius = 1.0);

/// Textbook BFS; neighbors scanned in ascending index order.
ShortestPathTree bfs_oracle(const ExplicitGraph& graph, PointIndex source);

/// Textbook binary-heap Dijkstra keyed by (dist, index); dist[v] is
/// accumulated as dist[u] + |u - v|.
ShortestPathTree dijkstra_oracle(const ExplicitGraph& graph,
                                 PointIndex source);

/// Component of `source` by union-find over the explicit edges, ascending.
std::vector<PointIndex> connected_from(const ExplicitGraph& graph,
                                       PointIndex source);

/// O(|B| |R|) scan with the (delta, blue, red) tie order.
std::optional<BcpPair> naive_bcp(const PointSet& points,
                                 std::span<const WeightedBlue> blues,
                                 std::span<const PointIndex> reds);

enum class Shape { kUniformSquare, kGrid, kClusters, kCollinear };

struct GenSpec {
  std::size_t n = 100;
  Shape shape = Shape::kUniformSquare;
  double side = 10.0;
  std::uint64_t seed = 1;
  /// No pair may have |squared_distance - radius^2| below this margin.
  double min_threshold_margin = 1e-9;
  double radius = 1.0;
};

/// Deterministic point set for `spec`. Random shapes resample offending points
/// (bounded attempts); GRID cannot resample. Throws std::runtime_error when the
/// margin cannot be met and std::invalid_argument on n = 0 or side <= 0.
///
///  - UNIFORM_SQUARE: uniform in [0, side]^2.
///  - GRID: ceil(sqrt(n)) columns of cell centres ((i + 1/2) s, (j + 1/2) s),
///    s = side / columns, filled row by row.
///  - CLUSTERS: max(1, n / 50) centres uniform in the square, each point
///    uniform in a disk of radius side / 10 around a random centre, clamped to
///    the square.
///  - COLLINEAR: x uniform in [0, side], y = x / 2 (exactly collinear).
PointSet generate(const GenSpec& spec);

/// Parses "uniform" / "grid" / "clusters" / "collinear".
std::optional<Shape> parse_shape(std::string_view name);
std::string_view shape_name(Shape shape);

/// Side of a uniform square giving expected average degree ~`degree` for n
/// points (boundary effects ignored).
double side_for_degree(std::size_t n, double degree, double radius = 1.0);

}  // namespace udg::oracle
