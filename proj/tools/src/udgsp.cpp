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


#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "udg/cli/commands.hpp"

namespace {

using udg::cli::kInputError;

udg::io::Mode single_mode(const std::string& name) {
  return name == "weighted" ? udg::io::Mode::kWeighted
                            : udg::io::Mode::kUnweighted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest paths in unit-disk graphs without building the edge set"};
  app.require_subcommand(1);

  // gen
  udg::cli::GenOptions gen;
  std::string shape = "uniform";
  double degree = 0.0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded point set");
  gen_cmd->add_option("-n,--n", gen.spec.n, "Number of points")->capture_default_str();
  gen_cmd->add_option("--shape", shape, "uniform, grid, clusters or collinear")
      ->check(CLI::IsMember({"uniform", "grid", "clusters", "collinear"}))
      ->capture_default_str();
  gen_cmd->add_option("--side", gen.spec.side, "Side of the bounding square")
      ->capture_default_str();
  auto* degree_opt = gen_cmd->add_option(
      "--degree", degree, "Pick the side for this expected average degree");
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed (UDG_SEED overrides)")
      ->capture_default_str();
  gen_cmd->add_option("--margin", gen.spec.min_threshold_margin,
                      "Minimum |d^2 - r^2| between any pair")
      ->capture_default_str();
  gen_cmd->add_option("--radius", gen.spec.radius, "Edge threshold")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Points file (default stdout)");
  degree_opt->excludes(gen_cmd->get_option("--side"));

  // solve
  udg::cli::SolveOptions solve;
  std::string solve_mode = "unweighted";
  auto* solve_cmd = app.add_subcommand("solve", "Compute a shortest path tree");
  solve_cmd->add_option("-i,--input", solve.input, "Points file")->required();
  solve_cmd->add_option("-s,--source", solve.source, "Source index")->capture_default_str();
  solve_cmd->add_option("--mode", solve_mode, "unweighted or weighted")
      ->check(CLI::IsMember({"unweighted", "weighted"}))
      ->capture_default_str();
  solve_cmd->add_option("--radius", solve.radius, "Edge threshold")->capture_default_str();
  solve_cmd->add_option("-o,--output", solve.output, "Tree file (default stdout)");
  solve_cmd->add_option("--trace", solve.trace, "Write the weighted event log here");

  // verify
  udg::cli::VerifyOptions verify;
  std::string verify_mode = "both";
  auto* verify_cmd = app.add_subcommand(
      "verify", "Compare the solvers with explicit-graph BFS and Dijkstra");
  verify_cmd->add_option("-i,--input", verify.input, "Points file")->required();
  verify_cmd->add_option("-s,--source", verify.source, "Source index")->capture_default_str();
  verify_cmd->add_option("--mode", verify_mode, "unweighted, weighted or both")
      ->check(CLI::IsMember({"unweighted", "weighted", "both"}))
      ->capture_default_str();
  verify_cmd->add_option("--radius", verify.radius, "Edge threshold")->capture_default_str();

  // bench
  udg::cli::BenchOptions bench;
  std::string bench_mode = "both";
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers against the explicit oracle");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated point counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--degree", bench.degree, "Expected average degree")
      ->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "First seed (UDG_SEED overrides)")
      ->capture_default_str();
  bench_cmd->add_option("--mode", bench_mode, "unweighted, weighted or both")
      ->check(CLI::IsMember({"unweighted", "weighted", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--radius", bench.radius, "Edge threshold")->capture_default_str();
  bench_cmd->add_option("--oracle-max-n", bench.oracle_max_n,
                        "Skip explicit oracle timing above this size")
      ->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  // plot
  udg::cli::PlotOptions plot;
  std::size_t shade_level = 0;
  auto* plot_cmd = app.add_subcommand("plot", "Draw a tree and its level regions as SVG");
  plot_cmd->add_option("-i,--input", plot.input, "Points file")->required();
  plot_cmd->add_option("-t,--tree", plot.tree, "Tree file")->required();
  plot_cmd->add_option("-o,--output", plot.output, "SVG file (default stdout)");
  auto* shade_opt = plot_cmd->add_option("--shade-level", shade_level,
                                         "Shade only this hop level");
  plot_cmd->add_option("--width", plot.width, "Image width in pixels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  std::optional<std::uint64_t> env_seed;
  try {
    env_seed = udg::cli::seed_from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (gen_cmd->parsed()) {
    gen.spec.shape = *udg::oracle::parse_shape(shape);
    if (*degree_opt) gen.degree = degree;
    if (env_seed) gen.spec.seed = *env_seed;
    return udg::cli::cmd_gen(gen, std::cout, std::cerr);
  }
  if (solve_cmd->parsed()) {
    solve.mode = single_mode(solve_mode);
    return udg::cli::cmd_solve(solve, std::cout, std::cerr);
  }
  if (verify_cmd->parsed()) {
    verify.modes = *udg::cli::parse_modes(verify_mode);
    return udg::cli::cmd_verify(verify, std::cout, std::cerr);
  }
  if (bench_cmd->parsed()) {
    bench.modes = *udg::cli::parse_modes(bench_mode);
    if (env_seed) bench.seed = *env_seed;
    return udg::cli::cmd_bench(bench, std::cout, std::cerr);
  }
  if (*shade_opt) plot.shade_level = shade_level;
  return udg::cli::cmd_plot(plot, std::cout, std::cerr);
}
