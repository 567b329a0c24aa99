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

// Run reports and benchmark tables.

#ifndef SYMILP_REPORT_HPP_
#define SYMILP_REPORT_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symilp/model.hpp"

namespace symilp {

struct RunReport {
  std::string instance;
  std::string method;
  std::string status;
  std::optional<Rational> value;
  std::optional<QVector> point;
  std::string symmetry;  // level name, empty when not checked
  long m = 0;
  long n = 0;
  std::size_t layers_scanned = 0;
  std::size_t feasibility_checks = 0;
  double symmetry_seconds = 0;
  double lp_seconds = 0;
  double ip_seconds = 0;
  double wall_seconds = 0;
};

enum class OutputFormat { kText, kCsv };

// Points longer than `limit` entries are elided.
std::string format_point(const QVector& x, std::size_t limit = 20);

void write_reports(std::ostream& out, const std::vector<RunReport>& reports, OutputFormat format,
                   bool with_point = false);

struct BenchOptions {
  int repetitions = 3;  // IP time is the minimum over repetitions
};

// Times the symmetry certificate, the diagonal LP, and the core point scan.
RunReport bench_instance(const ILPInstance& inst, const BenchOptions& options = {});

// Standard parameters r = floor(n/e), lambda = 1/2.
std::vector<RunReport> bench_htc(const std::vector<int>& ns, const BenchOptions& options = {});
std::vector<RunReport> bench_wild(const std::vector<int>& ds, const BenchOptions& options = {});

}  // namespace symilp

#endif  // SYMILP_REPORT_HPP_
