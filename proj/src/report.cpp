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

#include "symilp/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "symilp/corepoint.hpp"
#include "symilp/instances.hpp"
#include "symilp/lp.hpp"
#include "symilp/symmetry.hpp"

namespace symilp {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<std::string> cells(const RunReport& r, bool with_point) {
  std::vector<std::string> out{r.instance,
                               r.method,
                               std::to_string(r.n),
                               std::to_string(r.m),
                               r.symmetry,
                               r.status,
                               r.value ? r.value->str() : "",
                               std::to_string(r.layers_scanned),
                               std::to_string(r.feasibility_checks),
                               fixed(r.symmetry_seconds),
                               fixed(r.lp_seconds),
                               fixed(r.ip_seconds),
                               fixed(r.wall_seconds)};
  if (with_point) out.push_back(r.point ? format_point(*r.point) : "");
  return out;
}

}  // namespace

std::string format_point(const QVector& x, std::size_t limit) {
  std::string out = "(";
  const auto n = static_cast<std::size_t>(x.size());
  for (std::size_t j = 0; j < std::min(n, limit); ++j) {
    if (j) out += ",";
    out += x(static_cast<Eigen::Index>(j)).str();
  }
  if (n > limit) out += ",... " + std::to_string(n - limit) + " more";
  return out + ")";
}

void write_reports(std::ostream& out, const std::vector<RunReport>& reports, OutputFormat format,
                   bool with_point) {
  std::vector<std::string> header{"instance", "method", "n",      "m",    "symmetry",
                                  "status",   "value",  "layers", "checks", "time_sym_s",
                                  "time_lp_s", "time_ip_s", "time_total_s"};
  if (with_point) header.push_back("point");
  std::vector<std::vector<std::string>> table{header};
  for (const auto& r : reports) table.push_back(cells(r, with_point));
  if (format == OutputFormat::kCsv) {
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        const bool quote = row[c].find(',') != std::string::npos;
        out << (quote ? "\"" : "") << row[c] << (quote ? "\"" : "");
      }
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      if (c + 1 == row.size()) {
        out << row[c];
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << '\n';
  }
}

RunReport bench_instance(const ILPInstance& inst, const BenchOptions& options) {
  const auto wall = std::chrono::steady_clock::now();
  RunReport rep;
  rep.instance = inst.name();
  rep.method = "corepoint";
  rep.m = static_cast<long>(inst.rows());
  rep.n = static_cast<long>(inst.cols());

  auto start = std::chrono::steady_clock::now();
  const SymmetryLevel level = verify_symmetric_group_invariance(inst);
  rep.symmetry_seconds = seconds_since(start);
  rep.symmetry = level_name(level);
  if (!certifies_transitivity(level, static_cast<int>(inst.cols()))) {
    rep.status = "refused";
    rep.wall_seconds = seconds_since(wall);
    return rep;
  }

  start = std::chrono::steady_clock::now();
  const LineOutcome line = solve_lp_on_line(inst);
  rep.lp_seconds = seconds_since(start);
  if (line.status == LPStatus::kUnbounded) {
    rep.status = "unbounded";
    rep.wall_seconds = seconds_since(wall);
    return rep;
  }

  ILPOutcome best;
  for (int k = 0; k < std::max(1, options.repetitions); ++k) {
    ScanStats stats;
    start = std::chrono::steady_clock::now();
    ILPOutcome out = core_point_scan(inst, line, &stats);
    const double t = seconds_since(start);
    if (k == 0 || t < rep.ip_seconds) rep.ip_seconds = t;
    rep.layers_scanned = stats.layers_scanned;
    rep.feasibility_checks = stats.feasibility_checks;
    best = std::move(out);
  }
  if (best.point && !is_feasible(inst, *best.point)) {
    throw std::logic_error("core point scan returned an infeasible point");
  }
  rep.status = status_name(best.status);
  rep.value = best.value;
  rep.point = best.point;
  rep.wall_seconds = seconds_since(wall);
  return rep;
}

std::vector<RunReport> bench_htc(const std::vector<int>& ns, const BenchOptions& options) {
  std::vector<RunReport> out;
  for (int n : ns) out.push_back(bench_instance(gen_hypertruncated_cube(HtcParams::standard(n)), options));
  return out;
}

std::vector<RunReport> bench_wild(const std::vector<int>& ds, const BenchOptions& options) {
  std::vector<RunReport> out;
  for (int d : ds) out.push_back(bench_instance(gen_wild(d), options));
  return out;
}

}  // namespace symilp
