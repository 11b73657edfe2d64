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


#include "udg/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "udg/delaunay.hpp"
#include "udg/shortest_path_tree.hpp"
#include "udg/unweighted_sssp.hpp"

namespace udg::cli {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_stdout(const std::string& path) { return path.empty() || path == "-"; }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& write) {
  if (is_stdout(path)) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  write(file);
  if (!file) throw InputError("error writing " + path);
}

PointSet load_points(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return io::read_points(in);
  } catch (const io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void check_source(const PointSet& points, PointIndex source) {
  if (!points.contains(source)) {
    throw InputError("source index " + std::to_string(source) +
                     " out of range (n = " + std::to_string(points.size()) +
                     ")");
  }
}

void check_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InputError("radius must be positive and finite");
  }
}

// Runs `body`, mapping input problems to kInputError with a message on err.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

std::string fixed(double value, int digits) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", digits, value);
  return buf.data();
}

ShortestPathTree run(const PointSet& points, PointIndex source, io::Mode mode,
                     double radius) {
  return mode == io::Mode::kUnweighted
             ? solve_unweighted(points, source, radius).tree
             : solve_weighted(points, source, {.radius = radius}).tree;
}

}  // namespace

void write_trace(std::ostream& out, std::span<const ColorEvent> events) {
  for (const ColorEvent& e : events) {
    out << e.iteration << ' ';
    if (e.kind == ColorEvent::Kind::kKillBlue) {
      out << "kill_blue " << e.blue << " -";
    } else {
      out << "settle_red " << e.blue << ' ' << e.red;
    }
    out << ' ' << io::format_real(e.dist) << '\n';
  }
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("UDG_SEED");
  if (raw == nullptr) return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("UDG_SEED is not an unsigned 64-bit integer: " +
                                std::string(text));
  }
  return value;
}

std::optional<std::vector<io::Mode>> parse_modes(const std::string& text) {
  if (text == "unweighted") return std::vector{io::Mode::kUnweighted};
  if (text == "weighted") return std::vector{io::Mode::kWeighted};
  if (text == "both") {
    return std::vector{io::Mode::kUnweighted, io::Mode::kWeighted};
  }
  return std::nullopt;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    oracle::GenSpec spec = options.spec;
    if (options.degree) {
      if (!(*options.degree > 0.0)) throw InputError("degree must be positive");
      check_radius(spec.radius);
      spec.side = oracle::side_for_degree(spec.n, *options.degree, spec.radius);
    }
    const PointSet points = oracle::generate(spec);
    with_output(options.output, out,
                [&](std::ostream& os) { io::write_points(os, points); });
    return kOk;
  });
}

int cmd_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const PointSet points = load_points(options.input);
    check_source(points, options.source);
    check_radius(options.radius);
    if (!options.trace.empty() && options.mode != io::Mode::kWeighted) {
      throw InputError("--trace requires weighted mode");
    }
    ShortestPathTree tree;
    std::vector<ColorEvent> events;
    if (options.mode == io::Mode::kUnweighted) {
      tree = solve_unweighted(points, options.source, options.radius).tree;
    } else {
      WeightedRun result = solve_weighted(
          points, options.source,
          {.radius = options.radius, .trace = !options.trace.empty()});
      tree = std::move(result.tree);
      events = std::move(result.events);
    }
    with_output(options.output, out, [&](std::ostream& os) {
      io::write_tree(os, tree, options.mode);
    });
    if (!options.trace.empty()) {
      with_output(options.trace, out,
                  [&](std::ostream& os) { write_trace(os, events); });
    }
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const PointSet points = load_points(options.input);
    check_source(points, options.source);
    check_radius(options.radius);
    const auto graph = oracle::build_explicit_bucketed(points, options.radius);
    const auto component = oracle::connected_from(graph, options.source);

    bool all_ok = true;
    for (io::Mode mode : options.modes) {
      const bool weighted = mode == io::Mode::kWeighted;
      const ShortestPathTree tree =
          run(points, options.source, mode, options.radius);
      const ShortestPathTree expected =
          weighted ? oracle::dijkstra_oracle(graph, options.source)
                   : oracle::bfs_oracle(graph, options.source);

      std::size_t mismatches = 0;
      double max_error = 0.0;
      std::vector<PointIndex> reached;
      for (PointIndex p = 0; p < points.size(); ++p) {
        const double got = tree.dist[p];
        const double want = expected.dist[p];
        if (tree.reachable(p)) reached.push_back(p);
        if (std::isinf(want) || std::isinf(got)) {
          mismatches += std::isinf(want) != std::isinf(got);
          continue;
        }
        const double error = std::abs(got - want);
        max_error = std::max(max_error, error);
        const double tolerance = weighted ? 1e-9 * std::max(1.0, want) : 0.0;
        mismatches += error > tolerance;
      }
      const std::string problem =
          validate_tree(points, tree, weighted, weighted ? 1e-12 : 0.0);
      const bool levels_ok =
          weighted || levels(tree) == levels(expected);
      const bool ok = mismatches == 0 && problem.empty() &&
                      reached == component && levels_ok;
      all_ok = all_ok && ok;

      out << "mode " << io::mode_name(mode) << " points " << points.size()
          << " source " << options.source << " reachable " << reached.size()
          << " mismatches " << mismatches << " max_error "
          << io::format_real(max_error) << " result "
          << (ok ? "ok" : "FAIL") << '\n';
      if (!problem.empty()) out << "  invalid tree: " << problem << '\n';
      if (reached != component) out << "  reachable set differs from oracle\n";
      if (!levels_ok) out << "  level sets differ from oracle\n";
    }
    return all_ok ? kOk : kVerifyFailed;
  });
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (options.sizes.empty() || options.seeds == 0 || options.modes.empty()) {
      throw InputError("bench needs at least one size, seed and mode");
    }
    check_radius(options.radius);
    if (!(options.degree > 0.0)) throw InputError("degree must be positive");

    using Clock = std::chrono::steady_clock;
    const auto ms_since = [](Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start)
          .count();
    };
    struct Cell {
      double build_ms = 0, solve_ms = 0, oracle_ms = -1;
      std::size_t dt_edges = 0, bcp_ops = 0;
    };
    const auto median = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      return v[(v.size() - 1) / 2];
    };
    const auto median_count = [](std::vector<std::size_t> v) {
      std::sort(v.begin(), v.end());
      return v[(v.size() - 1) / 2];
    };

    with_output(options.output, out, [&](std::ostream& os) {
      os << "n,mode,build_ms,solve_ms,explicit_oracle_ms,dt_edges,bcp_ops\n";
      for (std::size_t n : options.sizes) {
        std::vector<std::vector<Cell>> cells(options.modes.size());
        for (std::size_t s = 0; s < options.seeds; ++s) {
          const PointSet points = oracle::generate(
              {.n = n,
               .side = oracle::side_for_degree(n, options.degree, options.radius),
               .seed = options.seed + s,
               .radius = options.radius});
          const bool with_oracle = n <= options.oracle_max_n;
          for (std::size_t m = 0; m < options.modes.size(); ++m) {
            Cell cell;
            if (options.modes[m] == io::Mode::kUnweighted) {
              auto start = Clock::now();
              const DelaunayTriangulation dt = build_delaunay(points);
              cell.build_ms = ms_since(start);
              start = Clock::now();
              solve_unweighted(points, dt, 0, options.radius);
              cell.solve_ms = ms_since(start);
              cell.dt_edges = dt.edge_count();
              if (with_oracle) {
                start = Clock::now();
                oracle::bfs_oracle(
                    oracle::build_explicit_bucketed(points, options.radius), 0);
                cell.oracle_ms = ms_since(start);
              }
            } else {
              const auto start = Clock::now();
              const WeightedRun result =
                  solve_weighted(points, 0, {.radius = options.radius});
              cell.solve_ms = ms_since(start);
              cell.bcp_ops = result.stats.bcp_ops;
              if (with_oracle) {
                const auto ostart = Clock::now();
                oracle::dijkstra_oracle(
                    oracle::build_explicit_bucketed(points, options.radius), 0);
                cell.oracle_ms = ms_since(ostart);
              }
            }
            cells[m].push_back(cell);
          }
        }
        for (std::size_t m = 0; m < options.modes.size(); ++m) {
          const bool unweighted = options.modes[m] == io::Mode::kUnweighted;
          std::vector<double> build, solve, oracle_ms;
          std::vector<std::size_t> edges, ops;
          for (const Cell& c : cells[m]) {
            build.push_back(c.build_ms);
            solve.push_back(c.solve_ms);
            if (c.oracle_ms >= 0) oracle_ms.push_back(c.oracle_ms);
            edges.push_back(c.dt_edges);
            ops.push_back(c.bcp_ops);
          }
          os << n << ',' << io::mode_name(options.modes[m]) << ','
             << (unweighted ? fixed(median(build), 3) : "") << ','
             << fixed(median(solve), 3) << ','
             << (oracle_ms.empty() ? "" : fixed(median(oracle_ms), 3)) << ','
             << (unweighted ? std::to_string(median_count(edges)) : "") << ','
             << (unweighted ? "" : std::to_string(median_count(ops))) << '\n';
        }
        os.flush();
      }
    });
    return kOk;
  });
}

int cmd_plot(const PlotOptions& options, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const PointSet points = load_points(options.input);
    std::ifstream tree_in = open_input(options.tree);
    io::TreeFile file;
    try {
      file = io::read_tree(tree_in);
    } catch (const io::ParseError& e) {
      throw InputError(options.tree + ": " + e.what());
    }
    const ShortestPathTree& tree = file.tree;
    if (tree.size() != points.size()) {
      throw InputError("tree has " + std::to_string(tree.size()) +
                       " points, input has " + std::to_string(points.size()));
    }
    if (!(options.width > 0.0)) throw InputError("width must be positive");
    const std::size_t n = points.size();
    const double r = tree.radius;

    // Hop depth in the tree, by walking children from the source.
    std::vector<std::vector<PointIndex>> children(n);
    for (PointIndex p = 0; p < n; ++p) {
      if (tree.parent[p] != kNoPoint && tree.parent[p] < n) {
        children[tree.parent[p]].push_back(p);
      }
    }
    constexpr std::size_t kNoDepth = static_cast<std::size_t>(-1);
    std::vector<std::size_t> depth(n, kNoDepth);
    std::deque<PointIndex> queue{tree.source};
    depth[tree.source] = 0;
    std::size_t max_depth = 0;
    while (!queue.empty()) {
      const PointIndex p = queue.front();
      queue.pop_front();
      for (PointIndex c : children[p]) {
        if (depth[c] != kNoDepth) continue;
        depth[c] = depth[p] + 1;
        max_depth = std::max(max_depth, depth[c]);
        queue.push_back(c);
      }
    }

    double min_x = points[0].x, max_x = min_x;
    double min_y = points[0].y, max_y = min_y;
    for (const Point& p : points.points()) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    const double scale = options.width / (max_x - min_x + 2 * r);
    const double height = (max_y - min_y + 2 * r) * scale;
    const auto sx = [&](double x) { return fixed((x - min_x + r) * scale, 2); };
    const auto sy = [&](double y) { return fixed((max_y - y + r) * scale, 2); };
    const std::string disk = fixed(r * scale, 2);
    const std::string dot = fixed(std::max(1.5, std::min(4.0, r * scale / 8)), 2);
    static constexpr std::array<const char*, 8> kPalette{
        "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
        "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};

    with_output(options.output, out, [&](std::ostream& os) {
      os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
         << fixed(options.width, 2) << "\" height=\"" << fixed(height, 2)
         << "\" viewBox=\"0 0 " << fixed(options.width, 2) << ' '
         << fixed(height, 2) << "\">\n";
      os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
      // Group opacity makes each level read as one union of disks.
      for (std::size_t level = 0; level <= max_depth; ++level) {
        if (options.shade_level && *options.shade_level != level) continue;
        os << "<g class=\"level\" data-level=\"" << level << "\" fill=\""
           << kPalette[level % kPalette.size()] << "\" opacity=\"0.2\">\n";
        for (PointIndex p = 0; p < n; ++p) {
          if (depth[p] != level) continue;
          os << "<circle cx=\"" << sx(points[p].x) << "\" cy=\""
             << sy(points[p].y) << "\" r=\"" << disk << "\"/>\n";
        }
        os << "</g>\n";
      }
      os << "<g stroke=\"#333\" stroke-width=\"1\">\n";
      for (PointIndex p = 0; p < n; ++p) {
        if (depth[p] == kNoDepth || p == tree.source) continue;
        const Point& a = points[tree.parent[p]];
        os << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
           << sx(points[p].x) << "\" y2=\"" << sy(points[p].y) << "\"/>\n";
      }
      os << "</g>\n";
      for (PointIndex p = 0; p < n; ++p) {
        const bool reached = depth[p] != kNoDepth;
        os << "<circle cx=\"" << sx(points[p].x) << "\" cy=\""
           << sy(points[p].y) << "\" r=\"" << dot << "\" fill=\""
           << (p == tree.source ? "#d62728" : reached ? "black" : "#bbb")
           << "\"/>\n";
      }
      os << "</svg>\n";
    });
    return kOk;
  });
}

}  // namespace udg::cli
