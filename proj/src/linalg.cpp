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

#include "symilp/linalg.hpp"

#include <numeric>
#include <utility>

#include "symilp/errors.hpp"

namespace symilp {

QVector multiply(const QMatrix& m, const QVector& x) {
  if (m.cols() != x.size()) throw Error(ErrorCode::kDimensionMismatch, "multiply");
  QVector out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out(i) = dot(m.row(i), x);
  return out;
}

QVector primitive(const QVector& v) {
  bool small_integers = true;
  std::uint64_t g = 0;
  for (Eigen::Index i = 0; i < v.size() && small_integers; ++i) {
    auto value = v(i).to_int64();
    if (!value) {
      small_integers = false;
      break;
    }
    g = std::gcd(g, static_cast<std::uint64_t>(*value < 0 ? -*value : *value));
  }
  if (small_integers) {
    if (g <= 1) return v;
    QVector out(v.size());
    const auto div = static_cast<std::int64_t>(g);
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(*v(i).to_int64() / div);
    return out;
  }
  mpz_class den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, v(i).denominator());
  mpz_class num_gcd = 0;
  std::vector<mpz_class> scaled(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class n = v(i).numerator() * (den / v(i).denominator());
    num_gcd = gcd(num_gcd, n);
    scaled[static_cast<std::size_t>(i)] = std::move(n);
  }
  if (num_gcd == 0) return v;
  QVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = Rational(mpz_class(scaled[static_cast<std::size_t>(i)] / num_gcd));
  }
  return out;
}

bool lex_less(const QVector& a, const QVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (auto c = a(i) <=> b(i); c != 0) return c < 0;
  }
  return a.size() < b.size();
}

QMatrix rows_to_matrix(const std::vector<QVector>& rows, Eigen::Index cols) {
  QMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "rows_to_matrix");
    out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return out;
}

namespace detail {
namespace {

struct Echelon {
  QMatrix m;
  std::vector<Eigen::Index> pivot_cols;
};

// Fraction-free (Bareiss) forward elimination. Rows are first scaled to
// primitive integer rows so every intermediate entry is an integer minor of the
// input and each division is exact. Only the first `pivot_limit` columns are
// eligible as pivots; trailing columns (a right-hand side) are carried along.
Echelon bareiss(QMatrix m, Eigen::Index pivot_limit) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m.row(i) = primitive(QVector(m.row(i).transpose())).transpose();
  }
  Echelon out;
  Rational prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < pivot_limit && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rational pivot = m(r, c);
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      const Rational lead = m(i, c);
      for (Eigen::Index j = c + 1; j < m.cols(); ++j) {
        Rational v = pivot * m(i, j);
        if (!lead.is_zero()) v -= lead * m(r, j);
        if (!(prev == Rational(1))) v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = Rational(0);
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

// Solves the echelon system for the pivot variables given values of the
// non-pivot variables already stored in x (and, if present, a right-hand side
// column at index `rhs_col`).
void back_substitute(const Echelon& e, QVector& x, Eigen::Index rhs_col) {
  const Eigen::Index n = x.size();
  for (Eigen::Index r = static_cast<Eigen::Index>(e.pivot_cols.size()) - 1; r >= 0; --r) {
    const Eigen::Index c = e.pivot_cols[static_cast<std::size_t>(r)];
    Rational acc = rhs_col >= 0 ? e.m(r, rhs_col) : Rational(0);
    for (Eigen::Index j = c + 1; j < n; ++j) {
      if (!x(j).is_zero() && !e.m(r, j).is_zero()) acc -= e.m(r, j) * x(j);
    }
    x(c) = acc / e.m(r, c);
  }
}

}  // namespace

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const Eigen::Index n = m.cols();
  Echelon e = bareiss(m, n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<QVector> basis;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    QVector x = QVector::Constant(n, Rational(0));
    x(f) = Rational(1);
    back_substitute(e, x, -1);
    x = primitive(x);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      if (x(i).sign() < 0) x = -x;
      break;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<QVector> solve_linear(const QMatrix& m, const QVector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "solve_linear");
  const Eigen::Index n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = rhs;
  Echelon e = bareiss(std::move(aug), n);
  for (Eigen::Index r = static_cast<Eigen::Index>(e.pivot_cols.size()); r < e.m.rows(); ++r) {
    if (!e.m(r, n).is_zero()) return std::nullopt;
  }
  QVector x = QVector::Constant(n, Rational(0));
  back_substitute(e, x, n);
  return x;
}

std::size_t rank(const QMatrix& m) { return bareiss(m, m.cols()).pivot_cols.size(); }

}  // namespace detail
}  // namespace symilp
