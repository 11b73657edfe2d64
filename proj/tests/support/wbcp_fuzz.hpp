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
#include <string>

namespace udg::testing {

struct FuzzReport {
  std::size_t sequences = 0;
  std::size_t operations = 0;
  std::size_t queries = 0;
  std::size_t mismatches = 0;
  std::size_t residency_violations = 0;
  std::string first_failure;
};

/// Replays random operation sequences on WbcpIndex and on the naive scan and
/// compares every min_pair answer (blue, red and delta, bit for bit). Points
/// sit on a coarse lattice and weights are small dyadic values so that exact
/// ties are common.
FuzzReport fuzz_wbcp(std::size_t sequences, std::size_t max_points,
                     std::size_t max_ops, std::uint64_t seed);

}  // namespace udg::testing
