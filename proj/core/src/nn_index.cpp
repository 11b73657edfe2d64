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

#include "udg/nn_index.hpp"

#include <stdexcept>

namespace udg {

namespace {
std::span<const PointIndex> require_nonempty(
    std::span<const PointIndex> members) {
  if (members.empty()) {
    throw std::invalid_argument("nearest-neighbor index needs a member");
  }
  return members;
}
}  // namespace

NnIndex::NnIndex(const PointSet& points, std::span<const PointIndex> members)
    : members_(require_nonempty(members).begin(), members.end()),
      tree_(points, members_) {}

NnIndex::Neighbor NnIndex::nearest(const Point& q) const {
  const auto hit = tree_.nearest(q);
  return {hit->index, hit->key};
}

}  // namespace udg
