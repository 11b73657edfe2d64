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

#include "udg/wbcp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace udg {

namespace {
// Below this many slots the red tree is never rebuilt.
constexpr std::size_t kMinRebuildCapacity = 64;
}  // namespace

WbcpIndex::WbcpIndex(const PointSet& points,
                     std::span<const WeightedBlue> blues,
                     std::span<const PointIndex> reds)
    : points_(&points),
      role_(points.size(), Role::kNone),
      weight_(points.size(), 0.0),
      version_(points.size(), 0),
      red_tree_(points, reds, KdTree::Mode::kErasable) {
  for (PointIndex r : reds) role_[r] = Role::kRed;
  for (const WeightedBlue& b : blues) {
    check_index(b.index);
    if (role_[b.index] == Role::kRed) {
      throw std::invalid_argument("point " + std::to_string(b.index) +
                                  " is both blue and red");
    }
    insert_blue(b);
  }
  counters_ = {};
}

void WbcpIndex::check_index(PointIndex index) const {
  if (!points_->contains(index)) {
    throw std::out_of_range("point index " + std::to_string(index) +
                            " out of range");
  }
}

bool WbcpIndex::is_blue(PointIndex index) const {
  return index < role_.size() && role_[index] == Role::kBlue;
}

bool WbcpIndex::is_red(PointIndex index) const {
  return index < role_.size() && role_[index] == Role::kRed;
}

bool WbcpIndex::candidate_live(const Candidate& c) const {
  return role_[c.blue] == Role::kBlue && version_[c.blue] == c.version;
}

void WbcpIndex::push_candidate(PointIndex blue) {
  const double weight = weight_[blue];
  const Point& at = (*points_)[blue];
  ++counters_.nn_searches;
  const auto hit = red_tree_.nearest_by(
      at, [weight](double d2) { return weight + std::sqrt(d2); });
  if (!hit) return;
  heap_.push_back({hit->key, blue, hit->index, version_[blue]});
  std::push_heap(heap_.begin(), heap_.end(), HeapAfter{});
  peak_candidates_ = std::max(peak_candidates_, heap_.size());
}

void WbcpIndex::enforce_residency() {
  if (heap_.size() <= kCandidateFactor * (blue_count_ + red_count())) return;
  std::erase_if(heap_, [this](const Candidate& c) { return !candidate_live(c); });
  std::make_heap(heap_.begin(), heap_.end(), HeapAfter{});
  ++counters_.compactions;
}

std::optional<BcpPair> WbcpIndex::min_pair() {
  ++counters_.queries;
  if (blue_count_ == 0 || red_tree_.empty()) return std::nullopt;
  while (!heap_.empty()) {
    const Candidate top = heap_.front();
    if (!candidate_live(top)) {
      std::pop_heap(heap_.begin(), heap_.end(), HeapAfter{});
      heap_.pop_back();
      continue;
    }
    if (role_[top.red] == Role::kRed) {
      return BcpPair{top.blue, top.red, top.delta};
    }
    ++counters_.stale_pops;
    std::pop_heap(heap_.begin(), heap_.end(), HeapAfter{});
    heap_.pop_back();
    push_candidate(top.blue);
  }
  // Unreachable while both sides are nonempty: every live blue holds a
  // candidate as long as a red exists.
  throw std::logic_error("bichromatic closest pair cache lost a blue");
}

void WbcpIndex::insert_blue(const WeightedBlue& b) {
  check_index(b.index);
  if (role_[b.index] != Role::kNone) {
    throw std::invalid_argument("point " + std::to_string(b.index) +
                                " is already blue or red");
  }
  if (!(b.weight >= 0.0) || !std::isfinite(b.weight)) {
    throw std::invalid_argument("blue weight must be finite and nonnegative");
  }
  ++counters_.updates;
  role_[b.index] = Role::kBlue;
  weight_[b.index] = b.weight;
  ++version_[b.index];
  ++blue_count_;
  push_candidate(b.index);
  enforce_residency();
}

void WbcpIndex::delete_blue(PointIndex index) {
  if (!is_blue(index)) {
    throw std::invalid_argument("point " + std::to_string(index) +
                                " is not blue");
  }
  ++counters_.updates;
  role_[index] = Role::kNone;
  ++version_[index];
  --blue_count_;
  enforce_residency();
}

void WbcpIndex::delete_red(PointIndex index) {
  if (!is_red(index)) {
    throw std::invalid_argument("point " + std::to_string(index) +
                                " is not red");
  }
  ++counters_.updates;
  role_[index] = Role::kNone;
  red_tree_.erase(index);
  if (red_tree_.capacity() >= kMinRebuildCapacity &&
      2 * red_tree_.size() < red_tree_.capacity()) {
    red_tree_.rebuild();
    ++counters_.red_rebuilds;
  }
  enforce_residency();
}

}  // namespace udg
