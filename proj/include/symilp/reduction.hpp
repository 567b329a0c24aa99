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

// Orbit-summed reduction of a symmetric linear program onto the fixed space.

#ifndef SYMILP_REDUCTION_HPP_
#define SYMILP_REDUCTION_HPP_

#include <utility>
#include <vector>

#include "symilp/model.hpp"
#include "symilp/symmetry.hpp"

namespace symilp {

// Partition of row indices into orbits under row -> (row gamma | b). Orbits
// are ordered by their smallest member, members ascending. Throws
// kNotASymmetry if a generator fails is_symmetry.
std::vector<std::vector<Eigen::Index>> row_orbits(const ILPInstance& inst, const GroupSpec& group);

// One summed row (A'|b') per row orbit.
std::pair<QMatrix, QVector> orbit_sum_rows(const ILPInstance& inst, const GroupSpec& group);

struct ReducedProgram {
  QMatrix summed_a;
  QVector summed_b;
  QMatrix fixing;  // E, with ker E the fixed space
  QVector objective;
  const ILPInstance* origin = nullptr;

  // A'x <= b' stacked with E x <= 0 and -E x <= 0.
  std::pair<QMatrix, QVector> inequality_system() const;
  std::vector<RawRow> raw_rows() const;
};

ReducedProgram build_reduced(const ILPInstance& inst, const GroupSpec& group);

// Solves the reduced program. An optimal point is checked against the
// original system and against E x = 0.
LPOutcome solve_symmetric_lp(const ILPInstance& inst, const GroupSpec& group);

}  // namespace symilp

#endif  // SYMILP_REDUCTION_HPP_
