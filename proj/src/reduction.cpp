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

#include "symilp/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "symilp/errors.hpp"
#include "symilp/lp.hpp"

namespace symilp {

std::vector<std::vector<Eigen::Index>> row_orbits(const ILPInstance& inst,
                                                  const GroupSpec& group) {
  if (group.degree() != inst.cols()) throw Error(ErrorCode::kDimensionMismatch, "row_orbits");
  const Eigen::Index m = inst.rows();
  std::vector<std::vector<Eigen::Index>> images;
  for (const auto& g : group.generators()) {
    std::vector<Eigen::Index> phi(static_cast<std::size_t>(m));
    bool ok = is_symmetry(inst, g);
    for (Eigen::Index i = 0; i < m && ok; ++i) {
      phi[static_cast<std::size_t>(i)] = find_image_row(inst, g, i);
      ok = phi[static_cast<std::size_t>(i)] >= 0;
    }
    if (!ok) throw Error(ErrorCode::kNotASymmetry, "generator " + g.str() + " is not a symmetry");
    images.push_back(std::move(phi));
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::vector<std::vector<Eigen::Index>> orbits;
  for (Eigen::Index start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Eigen::Index> orbit{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (const auto& phi : images) {
        const Eigen::Index k = phi[static_cast<std::size_t>(orbit[q])];
        if (!seen[static_cast<std::size_t>(k)]) {
          seen[static_cast<std::size_t>(k)] = true;
          orbit.push_back(k);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::pair<QMatrix, QVector> orbit_sum_rows(const ILPInstance& inst, const GroupSpec& group) {
  const auto orbits = row_orbits(inst, group);
  const Eigen::Index n = inst.cols();
  QMatrix a = QMatrix::Constant(static_cast<Eigen::Index>(orbits.size()), n, Rational(0));
  QVector b = QVector::Constant(static_cast<Eigen::Index>(orbits.size()), Rational(0));
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto r = static_cast<Eigen::Index>(o);
    for (Eigen::Index i : orbits[o]) {
      a.row(r) += inst.A().row(i);
      b(r) += inst.b()(i);
    }
  }
  return {std::move(a), std::move(b)};
}

std::pair<QMatrix, QVector> ReducedProgram::inequality_system() const {
  const Eigen::Index m = summed_a.rows();
  const Eigen::Index e = fixing.rows();
  const Eigen::Index n = objective.size();
  QMatrix a(m + 2 * e, n);
  QVector b = QVector::Constant(m + 2 * e, Rational(0));
  a.topRows(m) = summed_a;
  b.head(m) = summed_b;
  a.middleRows(m, e) = fixing;
  a.bottomRows(e) = -fixing;
  return {std::move(a), std::move(b)};
}

std::vector<RawRow> ReducedProgram::raw_rows() const {
  auto [a, b] = inequality_system();
  std::vector<RawRow> rows;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    RawRow row(a.cols() + 1);
    row.head(a.cols()) = a.row(i).transpose();
    row(a.cols()) = b(i);
    rows.push_back(std::move(row));
  }
  return rows;
}

ReducedProgram build_reduced(const ILPInstance& inst, const GroupSpec& group) {
  ReducedProgram out;
  std::tie(out.summed_a, out.summed_b) = orbit_sum_rows(inst, group);
  out.fixing = fixing_equations(group);
  out.objective = inst.c();
  out.origin = &inst;
  return out;
}

LPOutcome solve_symmetric_lp(const ILPInstance& inst, const GroupSpec& group) {
  const ReducedProgram reduced = build_reduced(inst, group);
  const auto [a, b] = reduced.inequality_system();
  LPOutcome out = solve_lp(a, b, reduced.objective);
  if (out.point) {
    if (!is_feasible(inst, *out.point)) {
      throw std::logic_error("reduced optimum violates the original system");
    }
    const QVector ex = multiply(reduced.fixing, *out.point);
    for (Eigen::Index i = 0; i < ex.size(); ++i) {
      if (!ex(i).is_zero()) throw std::logic_error("reduced optimum leaves the fixed space");
    }
  }
  return out;
}

}  // namespace symilp
