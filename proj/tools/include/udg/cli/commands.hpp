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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udg/geom.hpp"
#include "udg/io.hpp"
#include "udg/oracle.hpp"
#include "udg/weighted_sssp.hpp"

namespace udg::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2 };

/// Output path convention: empty or "-" writes to the supplied stream.
struct GenOptions {
  oracle::GenSpec spec;
  /// When set, overrides spec.side with the side giving this expected degree.
  std::optional<double> degree;
  std::string output;
};

struct SolveOptions {
  std::string input;
  PointIndex source = 0;
  io::Mode mode = io::Mode::kUnweighted;
  double radius = 1.0;
  std::string output;
  /// Weighted mode only: event log destination.
  std::string trace;
};

struct VerifyOptions {
  std::string input;
  PointIndex source = 0;
  std::vector<io::Mode> modes{io::Mode::kUnweighted, io::Mode::kWeighted};
  double radius = 1.0;
};

struct BenchOptions {
  std::vector<std::size_t> sizes{1024, 2048, 4096};
  double degree = 10.0;
  std::size_t seeds = 3;
  std::uint64_t seed = 1;
  std::vector<io::Mode> modes{io::Mode::kUnweighted, io::Mode::kWeighted};
  double radius = 1.0;
  /// Explicit oracle timing is skipped above this size.
  std::size_t oracle_max_n = std::size_t{1} << 17;
  std::string output;
};

struct PlotOptions {
  std::string input;
  std::string tree;
  std::string output;
  /// Shade only this hop level; every level when unset.
  std::optional<std::size_t> shade_level;
  double width = 800.0;
};

/// Each command reports problems on `err` and returns an ExitCode.
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err);

/// Trace lines: "<iteration> kill_blue <blue> - <dist>" or
/// "<iteration> settle_red <blue> <red> <dist>".
void write_trace(std::ostream& out, std::span<const ColorEvent> events);

/// Value of UDG_SEED if set. Throws std::invalid_argument if it is not an
/// unsigned 64-bit integer.
std::optional<std::uint64_t> seed_from_env();

/// "unweighted", "weighted" or "both".
std::optional<std::vector<io::Mode>> parse_modes(const std::string& text);

}  // namespace udg::cli
