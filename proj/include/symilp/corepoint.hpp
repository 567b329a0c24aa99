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

// Core points of 1-layers and the core point algorithm.

#ifndef SYMILP_COREPOINT_HPP_
#define SYMILP_COREPOINT_HPP_

#include <vector>

#include "symilp/layers.hpp"
#include "symilp/lp.hpp"
#include "symilp/model.hpp"

namespace symilp {

// With k = qn + r, 0 <= r < n: every vector with r entries q+1 and n-r
// entries q, in lexicographic order.
std::vector<QVector> core_points(int n, const mpz_class& k);

// The canonical core point (q+1, ..., q+1, q, ..., q) of layer k.
QVector core_representative(int n, const mpz_class& k);

// Whether x, which must lie on layer k, is at minimal distance from the
// layer center among integral points of the layer.
bool core_distance_check(int n, const mpz_class& k, const QVector& x);

// Tests one representative per 1-layer, from floor(n zeta) down to
// n floor(zeta). Requires objective 1 and a Sym(n) or Alt(n) certificate
// (or options.assume_transitivity).
ILPOutcome solve_core_point(const ILPInstance& inst, const SolveOptions& options = {},
                            ScanStats* stats = nullptr);

// The scan of solve_core_point from a precomputed diagonal optimum, without
// the precondition checks.
ILPOutcome core_point_scan(const ILPInstance& inst, const LineOutcome& line,
                           ScanStats* stats = nullptr);

// Layer oracle answering with the core representative only.
LayerOracle make_core_point_oracle();

}  // namespace symilp

#endif  // SYMILP_COREPOINT_HPP_
