// Copyright 2026 The symilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symilp/corepoint.hpp"
#include "symilp/errors.hpp"
#include "symilp/instance_io.hpp"
#include "symilp/instances.hpp"
#include "symilp/layers.hpp"
#include "symilp/lp.hpp"
#include "symilp/reduction.hpp"
#include "symilp/report.hpp"
#include "symilp/symdetect.hpp"
#include "symilp/symmetry.hpp"

namespace {

using namespace symilp;

enum Exit : int {
  kExitOptimal = 0,
  kExitIo = 1,
  kExitInfeasible = 2,
  kExitUnbounded = 3,
  kExitRefused = 4,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kInfeasibleZeroRow:
    case ErrorCode::kInfeasibleRegion:
      return kExitInfeasible;
    case ErrorCode::kUnboundedRelaxation:
      return kExitUnbounded;
    default:
      return kExitRefused;
  }
}

struct Globals {
  std::uint64_t seed = 1;
  std::string output = "text";
  bool assume_transitivity = false;

  OutputFormat format() const { return output == "csv" ? OutputFormat::kCsv : OutputFormat::kText; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_to(const std::string& path, const ILPInstance& inst) {
  if (path.empty() || path == "-") {
    write_instance(std::cout, inst);
  } else {
    write_instance_file(path, inst);
  }
}

std::vector<int> range(int from, int to, int step) {
  std::vector<int> out;
  if (step <= 0) throw Error(ErrorCode::kBadParams, "step must be positive");
  for (int v = from; v <= to; v += step) out.push_back(v);
  return out;
}

int cmd_solve(const Globals& g, const std::string& file, const std::string& method) {
  const ILPInstance inst = read_instance_file(file);
  SolveOptions options;
  options.assume_transitivity = g.assume_transitivity;
  RunReport rep;
  rep.instance = inst.name();
  rep.method = method;
  rep.m = static_cast<long>(inst.rows());
  rep.n = static_cast<long>(inst.cols());
  const auto wall = std::chrono::steady_clock::now();
  // Symmetry is verified here rather than inside the solver so the report can
  // carry the detected level and its cost.
  if (method != "brute" && inst.objective_is_ones() && !options.assume_transitivity) {
    const SymmetryLevel level = verify_symmetric_group_invariance(inst);
    rep.symmetry_seconds = seconds_since(wall);
    rep.symmetry = level_name(level);
    if (method == "corepoint" && !certifies_transitivity(level, static_cast<int>(inst.cols()))) {
      throw Error(ErrorCode::kTransitivityNotEstablished,
                  std::string("symmetry level '") + level_name(level) +
                      "' does not certify the transitivity hypothesis; pass "
                      "--assume-transitivity to override");
    }
    if (method == "layers" && level == SymmetryLevel::kNone) {
      throw Error(ErrorCode::kTransitivityNotEstablished,
                  "no transitive symmetry group found; pass --assume-transitivity to override");
    }
    options.assume_transitivity = true;
  }
  ScanStats stats;
  const auto start = std::chrono::steady_clock::now();
  ILPOutcome out;
  if (method == "corepoint") {
    out = solve_core_point(inst, options, &stats);
  } else if (method == "layers") {
    out = solve_by_layers(inst, make_enumeration_oracle(options.box_cap), options, &stats);
  } else {
    out = brute_force_search(inst, options.box_cap);
  }
  rep.ip_seconds = seconds_since(start);
  rep.wall_seconds = seconds_since(wall);
  if (out.point && !is_feasible(inst, *out.point)) {
    throw std::logic_error("solver returned an infeasible point");
  }
  rep.status = status_name(out.status);
  rep.value = out.value;
  rep.point = out.point;
  rep.layers_scanned = stats.layers_scanned;
  rep.feasibility_checks = stats.feasibility_checks;
  write_reports(std::cout, {rep}, g.format(), true);
  return out.status == ILPStatus::kOptimal ? kExitOptimal : kExitInfeasible;
}

int cmd_lp(const std::string& file) {
  const ILPInstance inst = read_instance_file(file);
  const LPOutcome out = solve_lp(inst);
  std::cout << "status: " << status_name(out.status) << "\n";
  if (out.value) std::cout << "value: " << *out.value << "\n";
  if (out.point) {
    std::cout << "point:";
    for (Eigen::Index j = 0; j < out.point->size(); ++j) std::cout << ' ' << (*out.point)(j);
    std::cout << "\n";
  }
  switch (out.status) {
    case LPStatus::kOptimal: return kExitOptimal;
    case LPStatus::kInfeasible: return kExitInfeasible;
    case LPStatus::kUnbounded: return kExitUnbounded;
  }
  return kExitOptimal;
}

int cmd_detect(const std::string& file, const std::string& graph, const std::string& emit) {
  const ILPInstance inst = read_instance_file(file);
  const GraphMode mode = graph == "reduced" ? GraphMode::kReduced : GraphMode::kFull;
  const DetectionResult res = detect_symmetries(inst, mode);
  std::cout << "graph: " << mode_name(mode) << "\n";
  std::cout << "order: " << res.order.get_str() << "\n";
  std::cout << "generators: " << res.group.generators().size() << "\n";
  write_generators(std::cout, res.group);
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw Error(ErrorCode::kIo, "cannot write '" + emit + "'");
    write_generators(out, res.group);
  }
  return kExitOptimal;
}

int cmd_reduce(const std::string& file, const std::string& group_file, const std::string& out_file) {
  const ILPInstance inst = read_instance_file(file);
  const GroupSpec group = read_generators_file(group_file, static_cast<int>(inst.cols()));
  const ReducedProgram reduced = build_reduced(inst, group);
  const std::string comment = "reduced from " + inst.name() + ": " +
                              std::to_string(reduced.summed_a.rows()) + " orbit rows, " +
                              std::to_string(reduced.fixing.rows()) + " equations";
  if (out_file.empty() || out_file == "-") {
    write_program(std::cout, reduced.raw_rows(), reduced.objective, comment);
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error(ErrorCode::kIo, "cannot write '" + out_file + "'");
    write_program(out, reduced.raw_rows(), reduced.objective, comment);
  }
  return kExitOptimal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for highly symmetric integer linear programs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized corpora");
  app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"text", "csv"}));
  app.add_flag("--assume-transitivity", g.assume_transitivity,
               "Skip the transitivity certificate of the layer and core point solvers");

  auto* generate = app.add_subcommand("generate", "Write a benchmark instance");
  generate->require_subcommand(1);
  std::string out_path;
  auto* gen_htc = generate->add_subcommand("htc", "Hypertruncated cube");
  int htc_n = 0;
  std::optional<int> htc_r;
  std::string htc_lambda = "1/2";
  gen_htc->add_option("--n", htc_n, "Dimension")->required();
  gen_htc->add_option("--r", htc_r, "Truncation level (default floor(n/e))");
  gen_htc->add_option("--lambda", htc_lambda, "Apex parameter as p/q");
  gen_htc->add_option("-o,--out", out_path, "Output file (default stdout)");
  auto* gen_wild_cmd = generate->add_subcommand("wild", "Symmetrized distorted join");
  int wild_d = 0;
  gen_wild_cmd->add_option("--d", wild_d, "Cross polytope dimension")->required();
  gen_wild_cmd->add_option("-o,--out", out_path, "Output file (default stdout)");
  auto* gen_random = generate->add_subcommand("random", "Random Sym(n)-invariant instance");
  int random_n = 0;
  gen_random->add_option("--n", random_n, "Dimension")->required();
  gen_random->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Solve max 1^T x over the integer points");
  std::string file;
  std::string method = "corepoint";
  solve->add_option("file", file, "Instance file")->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"corepoint", "layers", "brute"}));
  solve->add_flag("--assume-transitivity", g.assume_transitivity, "Skip the transitivity certificate");

  auto* detect = app.add_subcommand("detect", "Detect symmetries through the ILP graph");
  std::string graph = "full";
  std::string emit;
  detect->add_option("file", file, "Instance file")->required();
  detect->add_option("--graph", graph)->check(CLI::IsMember({"reduced", "full"}));
  detect->add_option("--emit-generators", emit, "Write generators to this file");

  auto* reduce = app.add_subcommand("reduce", "Write the orbit-summed program on the fixed space");
  std::string group_file;
  reduce->add_option("file", file, "Instance file")->required();
  reduce->add_option("--group", group_file, "Generator file")->required();
  reduce->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* lp = app.add_subcommand("lp", "Solve the LP relaxation");
  lp->add_option("file", file, "Instance file")->required();

  auto* bench = app.add_subcommand("bench", "Benchmark table for a generated family");
  bench->require_subcommand(1);
  int from = 0;
  int to = -1;
  int step = 1;
  int reps = 3;
  auto* bench_htc_cmd = bench->add_subcommand("htc", "Hypertruncated cubes, r = floor(n/e), lambda = 1/2");
  bench_htc_cmd->add_option("--from", from)->default_val(100);
  bench_htc_cmd->add_option("--to", to)->default_val(2000);
  bench_htc_cmd->add_option("--step", step)->default_val(100);
  bench_htc_cmd->add_option("--reps", reps, "Repetitions of the IP scan")->default_val(3);
  auto* bench_wild_cmd = bench->add_subcommand("wild", "Symmetrized distorted joins");
  bench_wild_cmd->add_option("--from", from)->default_val(3);
  bench_wild_cmd->add_option("--to", to)->default_val(10);
  bench_wild_cmd->add_option("--step", step)->default_val(1);
  bench_wild_cmd->add_option("--reps", reps, "Repetitions of the IP scan")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitIo;
  }

  try {
    if (generate->parsed()) {
      if (gen_htc->parsed()) {
        const int r = htc_r ? *htc_r : HtcParams::standard(htc_n).r;
        write_to(out_path, gen_hypertruncated_cube(HtcParams{htc_n, r, Rational::parse(htc_lambda)}));
      } else if (gen_wild_cmd->parsed()) {
        write_to(out_path, gen_wild(wild_d));
      } else {
        write_to(out_path, gen_random_symmetric(random_n, g.seed));
      }
      return kExitOptimal;
    }
    if (solve->parsed()) return cmd_solve(g, file, method);
    if (lp->parsed()) return cmd_lp(file);
    if (detect->parsed()) return cmd_detect(file, graph, emit);
    if (reduce->parsed()) return cmd_reduce(file, group_file, out_path);
    if (bench->parsed()) {
      BenchOptions options;
      options.repetitions = reps;
      const std::vector<int> values = range(from, to, step);
      const auto reports = bench_htc_cmd->parsed() ? bench_htc(values, options) : bench_wild(values, options);
      write_reports(std::cout, reports, g.format());
      return kExitOptimal;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOptimal;
}
