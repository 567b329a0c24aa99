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

#include "symilp/lp.hpp"

#include <stdexcept>

#include "symilp/errors.hpp"

namespace symilp {
namespace {

// Dense tableau in dictionary form. Row i reads
//   x_{basis[i]} + sum_j t(i, j) x_j = t(i, rhs)
// and the last row holds the reduced costs with -(objective value) in the
// rhs column.
class Tableau {
 public:
  Tableau(Eigen::Index rows, Eigen::Index cols)
      : t_(QMatrix::Constant(rows + 1, cols + 1, Rational(0))),
        basis_(static_cast<std::size_t>(rows), -1),
        rows_(rows),
        cols_(cols) {}

  Rational& at(Eigen::Index i, Eigen::Index j) { return t_(i, j); }
  const Rational& at(Eigen::Index i, Eigen::Index j) const { return t_(i, j); }
  Rational& rhs(Eigen::Index i) { return t_(i, cols_); }
  Rational& cost(Eigen::Index j) { return t_(rows_, j); }
  Rational value() const { return -t_(rows_, cols_); }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index& basic(Eigen::Index i) { return basis_[static_cast<std::size_t>(i)]; }

  void pivot(Eigen::Index r, Eigen::Index e) {
    const Rational inv = Rational(1) / t_(r, e);
    nz_.clear();
    for (Eigen::Index j = 0; j <= cols_; ++j) {
      if (t_(r, j).is_zero()) continue;
      if (!(inv == Rational(1))) t_(r, j) *= inv;
      nz_.push_back(j);
    }
    for (Eigen::Index i = 0; i <= rows_; ++i) {
      if (i == r || t_(i, e).is_zero()) continue;
      const Rational f = t_(i, e);
      for (Eigen::Index j : nz_) {
        Rational prod = f * t_(r, j);
        t_(i, j) -= prod;
      }
    }
    basic(r) = e;
  }

  // Bland's rule over entering columns [0, allowed). Returns false when the
  // objective is unbounded.
  bool run(Eigen::Index allowed) {
    while (true) {
      Eigen::Index e = -1;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (t_(rows_, j).sign() > 0) {
          e = j;
          break;
        }
      }
      if (e < 0) return true;
      Eigen::Index r = -1;
      for (Eigen::Index i = 0; i < rows_; ++i) {
        if (t_(i, e).sign() <= 0) continue;
        if (r < 0) {
          r = i;
          continue;
        }
        // Compare t(i,rhs)/t(i,e) with t(r,rhs)/t(r,e); both denominators > 0.
        const auto cmp = (t_(i, cols_) * t_(r, e)) <=> (t_(r, cols_) * t_(i, e));
        if (cmp < 0 || (cmp == 0 && basic(i) < basic(r))) r = i;
      }
      if (r < 0) return false;
      pivot(r, e);
    }
  }

 private:
  QMatrix t_;
  std::vector<Eigen::Index> basis_;
  std::vector<Eigen::Index> nz_;
  Eigen::Index rows_;
  Eigen::Index cols_;
};

}  // namespace

LPOutcome solve_lp(const QMatrix& a, const QVector& b, const QVector& c) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = c.size();
  if (a.cols() != n || b.size() != m) throw Error(ErrorCode::kDimensionMismatch, "solve_lp");

  // Columns: u (n), v (n) with x = u - v, slacks (m), artificials.
  Eigen::Index artificials = 0;
  for (Eigen::Index i = 0; i < m; ++i) artificials += b(i).sign() < 0 ? 1 : 0;
  const Eigen::Index first_slack = 2 * n;
  const Eigen::Index first_art = first_slack + m;
  Tableau tab(m, first_art + artificials);

  Eigen::Index next_art = first_art;
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i).sign() < 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      const Rational v = flip ? -a(i, j) : a(i, j);
      tab.at(i, j) = v;
      tab.at(i, n + j) = -v;
    }
    tab.at(i, first_slack + i) = Rational(flip ? -1 : 1);
    tab.rhs(i) = flip ? -b(i) : b(i);
    if (flip) {
      tab.at(i, next_art) = Rational(1);
      tab.basic(i) = next_art++;
    } else {
      tab.basic(i) = first_slack + i;
    }
  }

  LPOutcome out;
  if (artificials > 0) {
    // Phase 1: maximize minus the sum of artificials.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basic(i) < first_art) continue;
      for (Eigen::Index j = 0; j < first_art; ++j) {
        if (!tab.at(i, j).is_zero()) tab.cost(j) += tab.at(i, j);
      }
      tab.cost(first_art + artificials) += tab.rhs(i);
    }
    tab.run(first_art);
    if (tab.value().sign() < 0) {
      out.status = LPStatus::kInfeasible;
      return out;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basic(i) < first_art) continue;
      for (Eigen::Index j = 0; j < first_art; ++j) {
        if (!tab.at(i, j).is_zero()) {
          tab.pivot(i, j);
          break;
        }
      }
      // A row that stays artificial is redundant and has no structural entries.
    }
  }

  // Phase 2 reduced costs.
  auto col_cost = [&](Eigen::Index j) -> Rational {
    if (j < n) return c(j);
    if (j < 2 * n) return -c(j - n);
    return Rational(0);
  };
  for (Eigen::Index j = 0; j <= first_art + artificials; ++j) tab.cost(j) = Rational(0);
  for (Eigen::Index j = 0; j < first_art; ++j) tab.cost(j) = col_cost(j);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index bj = tab.basic(i);
    if (bj >= first_art) continue;
    const Rational cb = col_cost(bj);
    if (cb.is_zero()) continue;
    for (Eigen::Index j = 0; j < first_art; ++j) {
      if (!tab.at(i, j).is_zero()) tab.cost(j) -= cb * tab.at(i, j);
    }
    tab.cost(first_art + artificials) -= cb * tab.rhs(i);
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basic(i) < first_art) tab.cost(tab.basic(i)) = Rational(0);
  }
  if (!tab.run(first_art)) {
    out.status = LPStatus::kUnbounded;
    return out;
  }

  QVector x = QVector::Constant(n, Rational(0));
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index bj = tab.basic(i);
    if (bj < n) {
      x(bj) += tab.rhs(i);
    } else if (bj < 2 * n) {
      x(bj - n) -= tab.rhs(i);
    }
  }
  out.status = LPStatus::kOptimal;
  out.value = dot(c, x);
  out.point = std::move(x);
  return out;
}

LPOutcome solve_lp(const ILPInstance& inst) {
  LPOutcome out = solve_lp(inst.A(), inst.b(), inst.c());
  if (out.point && !is_feasible(inst, *out.point)) {
    throw std::logic_error("simplex returned an infeasible point");
  }
  return out;
}

LineOutcome solve_lp_on_line(const ILPInstance& inst) {
  if (!inst.objective_is_ones()) {
    throw Error(ErrorCode::kObjectiveNotOnes, "the line reduction needs objective 1");
  }
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  LineOutcome out;
  for (Eigen::Index i = 0; i < inst.rows(); ++i) {
    Rational s;
    for (Eigen::Index j = 0; j < inst.cols(); ++j) s += inst.A()(i, j);
    const Rational& b = inst.b()(i);
    if (s.is_zero()) {
      if (b.sign() < 0) return out;
      continue;
    }
    Rational ratio = b / s;
    if (s.sign() > 0) {
      if (!hi || ratio < *hi) hi = std::move(ratio);
    } else if (!lo || ratio > *lo) {
      lo = std::move(ratio);
    }
  }
  if (lo && hi && *lo > *hi) return out;
  if (!hi) {
    out.status = LPStatus::kUnbounded;
    return out;
  }
  out.status = LPStatus::kOptimal;
  out.zeta = std::move(hi);
  return out;
}

std::vector<Interval> coordinate_bounds(const ILPInstance& inst) {
  const Eigen::Index n = inst.cols();
  std::vector<Interval> out(static_cast<std::size_t>(n));
  QVector c = QVector::Constant(n, Rational(0));
  for (Eigen::Index j = 0; j < n; ++j) {
    c(j) = Rational(1);
    LPOutcome up = solve_lp(inst.A(), inst.b(), c);
    if (up.status == LPStatus::kInfeasible) {
      throw Error(ErrorCode::kInfeasibleRegion, "P(A, b) is empty");
    }
    if (up.status == LPStatus::kOptimal) out[static_cast<std::size_t>(j)].upper = up.value;
    c(j) = Rational(-1);
    LPOutcome down = solve_lp(inst.A(), inst.b(), c);
    if (down.status == LPStatus::kOptimal) out[static_cast<std::size_t>(j)].lower = -*down.value;
    c(j) = Rational(0);
  }
  return out;
}

namespace {

std::int64_t to_box_coordinate(const mpz_class& v, Eigen::Index j) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorCode::kBoxTooLarge, "bound of x" + std::to_string(j + 1) + " out of range");
  }
  return v.get_si();
}

}  // namespace

IntegerBox default_box(const ILPInstance& inst) {
  const Eigen::Index n = inst.cols();
  std::vector<std::optional<mpz_class>> lo(static_cast<std::size_t>(n));
  std::vector<std::optional<mpz_class>> hi(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < inst.rows(); ++i) {
    Eigen::Index var = -1;
    int nonzeros = 0;
    for (Eigen::Index j = 0; j < n && nonzeros < 2; ++j) {
      if (!inst.A()(i, j).is_zero()) {
        var = j;
        ++nonzeros;
      }
    }
    if (nonzeros != 1) continue;
    const Rational& a = inst.A()(i, var);
    const Rational bound = inst.b()(i) / a;
    const auto v = static_cast<std::size_t>(var);
    if (a.sign() > 0) {
      mpz_class f = bound.floor();
      if (!hi[v] || f < *hi[v]) hi[v] = f;
    } else {
      mpz_class f = bound.ceil();
      if (!lo[v] || f > *lo[v]) lo[v] = f;
    }
  }
  bool explicit_box = true;
  for (std::size_t j = 0; j < lo.size(); ++j) explicit_box = explicit_box && lo[j] && hi[j];
  if (!explicit_box) {
    std::vector<Interval> bounds;
    try {
      bounds = coordinate_bounds(inst);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasibleRegion) throw;
      return IntegerBox{std::vector<std::int64_t>(lo.size(), 0),
                        std::vector<std::int64_t>(lo.size(), -1)};
    }
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (!bounds[j].lower || !bounds[j].upper) {
        throw Error(ErrorCode::kBoxTooLarge, "x" + std::to_string(j + 1) + " is unbounded");
      }
      mpz_class l = bounds[j].lower->ceil();
      mpz_class u = bounds[j].upper->floor();
      if (!lo[j] || l > *lo[j]) lo[j] = l;
      if (!hi[j] || u < *hi[j]) hi[j] = u;
    }
  }
  IntegerBox box;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    box.lower.push_back(to_box_coordinate(*lo[j], static_cast<Eigen::Index>(j)));
    box.upper.push_back(to_box_coordinate(*hi[j], static_cast<Eigen::Index>(j)));
  }
  return box;
}

namespace {

// Integer hull box of {x : ax <= b}; empty box when infeasible.
IntegerBox raw_box(const QMatrix& a, const QVector& b) {
  const Eigen::Index n = a.cols();
  IntegerBox box;
  for (Eigen::Index j = 0; j < n; ++j) {
    QVector e = QVector::Constant(n, Rational(0));
    e(j) = Rational(1);
    const LPOutcome up = solve_lp(a, b, e);
    if (up.status == LPStatus::kInfeasible) return IntegerBox::uniform(static_cast<std::size_t>(n), 0, -1);
    const LPOutcome down = solve_lp(a, b, -e);
    if (up.status == LPStatus::kUnbounded || down.status == LPStatus::kUnbounded) {
      throw Error(ErrorCode::kBoxTooLarge, "x" + std::to_string(j + 1) + " is unbounded");
    }
    box.lower.push_back(to_box_coordinate((-*down.value).ceil(), j));
    box.upper.push_back(to_box_coordinate(up.value->floor(), j));
  }
  return box;
}

}  // namespace

ILPOutcome brute_force_search(const ILPInstance& inst, double cap) {
  IntegerBox box;
  try {
    box = default_box(inst);
    return brute_force_ilp(inst, box, cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBoxTooLarge || box.dim() != 0) throw;
  }
  const LPOutcome lp = solve_lp(inst);
  if (lp.status == LPStatus::kInfeasible) return {};
  if (lp.status == LPStatus::kUnbounded) {
    throw Error(ErrorCode::kBoxTooLarge, "LP relaxation is unbounded, no finite search box");
  }
  // Every point with c^T x >= cutoff lies in the box of the slab, so a best
  // point at or above the cutoff is optimal. Otherwise widen the slab.
  const Eigen::Index m = inst.rows();
  const Eigen::Index n = inst.cols();
  QMatrix a(m + 1, n);
  QVector b(m + 1);
  a.topRows(m) = inst.A();
  b.head(m) = inst.b();
  a.row(m) = -inst.c().transpose();
  for (Rational step(1);; step *= Rational(2)) {
    const Rational cutoff = *lp.value - step;
    b(m) = -cutoff;
    const IntegerBox slab = raw_box(a, b);
    ILPOutcome out = brute_force_ilp(inst, slab, cap);
    if (out.status == ILPStatus::kOptimal && *out.value >= cutoff) return out;
  }
}

}  // namespace symilp
