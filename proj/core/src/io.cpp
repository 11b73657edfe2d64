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

#include "udg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

namespace udg::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on single spaces/tabs; empty fields are not produced.
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    pos = end;
  }
  return out;
}

double parse_real(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "expected a decimal number, got '" +
                               std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite value '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int parse_int(std::string_view text, std::size_t line) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(text) +
                               "'");
  }
  return value;
}

// Yields trimmed, non-empty, non-comment lines with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string_view& out) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      const std::string_view t = trim(buffer_);
      if (t.empty() || t.front() == '#') continue;
      out = t;
      return true;
    }
    return false;
  }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace

const char* mode_name(Mode mode) {
  return mode == Mode::kWeighted ? "weighted" : "unweighted";
}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

PointSet read_points(std::istream& in) {
  LineReader reader(in);
  std::string_view line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing point count");
  const auto header = fields(line);
  if (header.size() != 1) {
    throw ParseError(reader.line(), "first line must hold the point count");
  }
  const auto n = parse_int<std::size_t>(header[0], reader.line());
  if (n == 0) throw ParseError(reader.line(), "point count must be >= 1");

  std::vector<Point> points;
  points.reserve(n);
  while (points.size() < n) {
    if (!reader.next(line)) {
      throw ParseError(reader.line(), "expected " + std::to_string(n) +
                                          " points, found " +
                                          std::to_string(points.size()));
    }
    const auto xy = fields(line);
    if (xy.size() != 2) {
      throw ParseError(reader.line(), "expected 'x y'");
    }
    points.push_back({parse_real(xy[0], reader.line()),
                      parse_real(xy[1], reader.line())});
  }
  if (reader.next(line)) {
    throw ParseError(reader.line(), "more coordinate lines than the count " +
                                        std::to_string(n));
  }
  return PointSet(std::move(points));
}

void write_points(std::ostream& out, const PointSet& points) {
  out << points.size() << '\n';
  for (const Point& p : points.points()) {
    out << format_real(p.x) << ' ' << format_real(p.y) << '\n';
  }
}

void write_tree(std::ostream& out, const ShortestPathTree& tree, Mode mode) {
  out << "source " << tree.source << " radius " << format_real(tree.radius)
      << " mode " << mode_name(mode) << '\n';
  for (PointIndex p = 0; p < tree.size(); ++p) {
    out << p << ' ' << format_real(tree.dist[p]) << ' ';
    if (tree.parent[p] == kNoPoint) {
      out << "-1";
    } else {
      out << tree.parent[p];
    }
    out << '\n';
  }
}

TreeFile read_tree(std::istream& in) {
  LineReader reader(in);
  std::string_view line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing header");
  const auto header = fields(line);
  if (header.size() != 6 || header[0] != "source" || header[2] != "radius" ||
      header[4] != "mode") {
    throw ParseError(reader.line(),
                     "header must be 'source <s> radius <r> mode <m>'");
  }
  TreeFile file;
  file.tree.source = parse_int<PointIndex>(header[1], reader.line());
  file.tree.radius = parse_real(header[3], reader.line());
  if (header[5] == "unweighted") {
    file.mode = Mode::kUnweighted;
  } else if (header[5] == "weighted") {
    file.mode = Mode::kWeighted;
  } else {
    throw ParseError(reader.line(), "unknown mode '" + std::string(header[5]) +
                                        "'");
  }

  while (reader.next(line)) {
    const auto row = fields(line);
    if (row.size() != 3) {
      throw ParseError(reader.line(), "expected '<index> <dist> <parent>'");
    }
    const auto index = parse_int<std::size_t>(row[0], reader.line());
    if (index != file.tree.dist.size()) {
      throw ParseError(reader.line(), "rows must be in index order");
    }
    file.tree.dist.push_back(row[1] == "inf" ? kUnreachable
                                             : parse_real(row[1], reader.line()));
    const auto parent = parse_int<long long>(row[2], reader.line());
    if (parent < -1) throw ParseError(reader.line(), "invalid parent");
    file.tree.parent.push_back(parent == -1 ? kNoPoint
                                            : static_cast<PointIndex>(parent));
  }
  if (file.tree.dist.empty()) throw ParseError(reader.line(), "no tree rows");
  if (file.tree.source >= file.tree.dist.size()) {
    throw ParseError(0, "source index out of range");
  }
  return file;
}

}  // namespace udg::io
