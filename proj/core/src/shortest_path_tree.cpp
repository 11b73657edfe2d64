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

#include "udg/shortest_path_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace udg {

std::size_t ShortestPathTree::reachable_count() const {
  return static_cast<std::size_t>(
      std::count_if(dist.begin(), dist.end(),
                    [](double d) { return d != kUnreachable; }));
}

std::vector<LevelSet> levels(const ShortestPathTree& tree) {
  std::vector<LevelSet> out;
  for (PointIndex p = 0; p < tree.size(); ++p) {
    const double d = tree.dist[p];
    if (d == kUnreachable) continue;
    if (d < 0.0 || d != std::floor(d)) {
      throw std::invalid_argument("levels: dist of point " +
                                  std::to_string(p) + " is not a hop count");
    }
    const auto level = static_cast<std::size_t>(d);
    if (level >= out.size()) {
      const std::size_t old = out.size();
      out.resize(level + 1);
      for (std::size_t i = old; i < out.size(); ++i) out[i].level = i;
    }
    out[level].members.push_back(p);
  }
  return out;
}

std::string validate_tree(const PointSet& points, const ShortestPathTree& tree,
                          bool weighted, double tolerance) {
  const std::size_t n = points.size();
  std::ostringstream why;
  if (tree.dist.size() != n || tree.parent.size() != n) {
    return "table size does not match the point count";
  }
  if (!points.contains(tree.source)) return "source out of range";
  if (tree.dist[tree.source] != 0.0) return "dist[source] != 0";
  if (tree.parent[tree.source] != kNoPoint) return "source has a parent";

  const double r2 = tree.radius * tree.radius;
  for (PointIndex p = 0; p < n; ++p) {
    if (p == tree.source) continue;
    const PointIndex q = tree.parent[p];
    if (tree.dist[p] == kUnreachable) {
      if (q != kNoPoint) {
        why << "unreachable point " << p << " has parent " << q;
        return why.str();
      }
      continue;
    }
    if (q == kNoPoint || q >= n) {
      why << "reachable point " << p << " has no valid parent";
      return why.str();
    }
    if (tree.dist[q] == kUnreachable) {
      why << "parent " << q << " of point " << p << " is unreachable";
      return why.str();
    }
    const double d2 = squared_distance(points[p], points[q]);
    if (d2 > r2) {
      why << "parent edge " << q << "-" << p << " is longer than the radius";
      return why.str();
    }
    const double step = weighted ? std::sqrt(d2) : 1.0;
    if (std::abs(tree.dist[p] - (tree.dist[q] + step)) > tolerance) {
      why << "dist[" << p << "] = " << tree.dist[p] << " but dist[parent "
          << q << "] + edge = " << tree.dist[q] + step;
      return why.str();
    }
  }

  // Every parent chain must reach the source; colour 2 marks verified points.
  std::vector<std::uint8_t> state(n, 0);
  state[tree.source] = 2;
  std::vector<PointIndex> chain;
  for (PointIndex p = 0; p < n; ++p) {
    if (tree.dist[p] == kUnreachable || state[p] == 2) continue;
    chain.clear();
    PointIndex cur = p;
    while (state[cur] == 0) {
      state[cur] = 1;
      chain.push_back(cur);
      cur = tree.parent[cur];
    }
    if (state[cur] == 1) {
      why << "parent cycle through point " << cur;
      return why.str();
    }
    for (PointIndex c : chain) state[c] = 2;
  }
  return {};
}

}  // namespace udg
