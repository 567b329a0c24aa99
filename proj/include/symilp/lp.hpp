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

// Exact two-phase simplex with Bland's rule.

#ifndef SYMILP_LP_HPP_
#define SYMILP_LP_HPP_

#include <optional>
#include <vector>

#include "symilp/model.hpp"

namespace symilp {

// max c^T x s.t. Ax <= b with x free. Accepts any (possibly empty) system,
// which is what the reduced program of an orbit reduction needs.
LPOutcome solve_lp(const QMatrix& a, const QVector& b, const QVector& c);

// Same as above on a normalized instance. The returned point is re-checked
// with is_feasible.
LPOutcome solve_lp(const ILPInstance& inst);

struct LineOutcome {
  LPStatus status = LPStatus::kInfeasible;
  std::optional<Rational> zeta;  // present iff status is kOptimal
};

// Maximizes n*zeta subject to zeta * (A 1) <= b. Requires c = 1.
LineOutcome solve_lp_on_line(const ILPInstance& inst);

struct Interval {
  std::optional<Rational> lower;  // absent means unbounded below
  std::optional<Rational> upper;  // absent means unbounded above
};

// Range of every coordinate over P(A, b), using 2n simplex solves.
// Throws kInfeasibleRegion when P(A, b) is empty.
std::vector<Interval> coordinate_bounds(const ILPInstance& inst);

// Integer box for brute-force search. Coordinates bounded on both sides by
// single-variable rows take those bounds directly; the rest come from
// coordinate_bounds. Throws kBoxTooLarge for an unbounded coordinate.
IntegerBox default_box(const ILPInstance& inst);

// brute_force_ilp over default_box. When P(A, b) is unbounded but the LP
// optimum is finite, searches the slabs c^T x >= LP optimum - 2^t for
// t = 0, 1, ... until the best point clears the slab's cutoff. Throws
// kBoxTooLarge when a slab box is unbounded or exceeds `cap`.
ILPOutcome brute_force_search(const ILPInstance& inst, double cap = kDefaultBoxCap);

}  // namespace symilp

#endif  // SYMILP_LP_HPP_
