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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "udg/geom.hpp"
#include "udg/shortest_path_tree.hpp"

namespace udg::io {

/// Malformed input; `line()` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class Mode { kUnweighted, kWeighted };

const char* mode_name(Mode mode);

/// Points file: first non-comment line holds n, then n lines "x y". Lines
/// starting with '#' are ignored.
PointSet read_points(std::istream& in);
/// Coordinates printed with 17 significant digits, so reading back yields the
/// identical PointSet.
void write_points(std::ostream& out, const PointSet& points);

/// Tree file: "source <s> radius <r> mode <unweighted|weighted>", then one
/// "<index> <dist|inf> <parent|-1>" line per point in index order.
struct TreeFile {
  Mode mode = Mode::kUnweighted;
  ShortestPathTree tree;
};

void write_tree(std::ostream& out, const ShortestPathTree& tree, Mode mode);
TreeFile read_tree(std::istream& in);

/// Shortest round-trip-safe rendering with 17 significant digits ("%.17g").
std::string format_real(double value);

}  // namespace udg::io
