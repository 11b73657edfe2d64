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
#include <optional>
#include <span>
#include <vector>

#include "udg/geom.hpp"
#include "udg/kdtree.hpp"

namespace udg {

/// A blue point with its additive weight, fixed while it stays blue.
struct WeightedBlue {
  PointIndex index = kNoPoint;
  double weight = 0.0;
};

/// One (blue, red) pair and its weighted distance
/// delta = weight(blue) + |red - blue|.
struct BcpPair {
  PointIndex blue = kNoPoint;
  PointIndex red = kNoPoint;
  double delta = 0.0;

  friend bool operator==(const BcpPair&, const BcpPair&) = default;
};

/// delta exactly as every component evaluates it.
inline double weighted_distance(double weight, const Point& red,
                                const Point& blue) {
  return weight + std::sqrt(squared_distance(red, blue));
}

/// Lexicographic (delta, blue, red) order used to break ties.
inline bool pair_less(const BcpPair& a, const BcpPair& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  if (a.blue != b.blue) return a.blue < b.blue;
  return a.red < b.red;
}

/// Dynamic bichromatic closest pair of weighted blue points and red points
/// under delta(r, b) = w_b + |r - b|. Reds are only ever deleted.
///
/// Each blue keeps one cached candidate (delta to its nearest live red) in a
/// binary heap. Red deletions only increase those minima, so a cached key is a
/// lower bound; min_pair() pops until the top candidate's red is still live,
/// recomputing stale ones against a kd-tree over the reds (tombstoned, rebuilt
/// when half dead). Entries of deleted blues are dropped lazily and the heap is
/// compacted whenever it exceeds kCandidateFactor * (|B| + |R|) entries.
///
/// Exclusive access: min_pair() mutates the cache.
class WbcpIndex {
 public:
  static constexpr std::size_t kCandidateFactor = 2;

  /// Throws std::out_of_range on an invalid index, std::invalid_argument on
  /// overlapping or repeated indices or an invalid weight. `points` must
  /// outlive the index.
  WbcpIndex(const PointSet& points, std::span<const WeightedBlue> blues,
            std::span<const PointIndex> reds);

  /// Argmin of delta over B x R with (delta, blue, red) tie order, or nullopt
  /// when either side is empty.
  std::optional<BcpPair> min_pair();

  /// Throws std::invalid_argument if b.index is already blue or red.
  void insert_blue(const WeightedBlue& b);
  /// Throws std::invalid_argument if `index` is not blue.
  void delete_blue(PointIndex index);
  /// Throws std::invalid_argument if `index` is not red.
  void delete_red(PointIndex index);

  bool is_blue(PointIndex index) const;
  bool is_red(PointIndex index) const;
  std::size_t blue_count() const noexcept { return blue_count_; }
  std::size_t red_count() const noexcept { return red_tree_.size(); }

  /// Cached candidate pairs currently stored; never exceeds
  /// kCandidateFactor * (blue_count() + red_count()).
  std::size_t candidate_count() const noexcept { return heap_.size(); }
  std::size_t peak_candidate_count() const noexcept { return peak_candidates_; }

  struct Counters {
    std::size_t queries = 0;      // min_pair calls
    std::size_t updates = 0;      // insertions and deletions
    std::size_t nn_searches = 0;  // nearest-red recomputations
    std::size_t stale_pops = 0;
    std::size_t compactions = 0;
    std::size_t red_rebuilds = 0;
  };
  const Counters& counters() const noexcept { return counters_; }

 private:
  enum class Role : std::uint8_t { kNone, kBlue, kRed };

  struct Candidate {
    double delta;
    PointIndex blue;
    PointIndex red;
    std::uint32_t version;
  };
  struct HeapAfter {
    bool operator()(const Candidate& a, const Candidate& b) const {
      if (a.delta != b.delta) return a.delta > b.delta;
      if (a.blue != b.blue) return a.blue > b.blue;
      return a.red > b.red;
    }
  };

  void check_index(PointIndex index) const;
  void push_candidate(PointIndex blue);
  bool candidate_live(const Candidate& c) const;
  void enforce_residency();

  const PointSet* points_;
  std::vector<Role> role_;
  std::vector<double> weight_;
  std::vector<std::uint32_t> version_;
  std::size_t blue_count_ = 0;
  KdTree red_tree_;
  std::vector<Candidate> heap_;
  std::size_t peak_candidates_ = 0;
  Counters counters_;
};

}  // namespace udg
