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

#ifndef SYMILP_LINALG_HPP_
#define SYMILP_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "symilp/rational.hpp"

namespace symilp {

// Dense types are templated on the scalar; the library instantiates them with
// Rational. Matrices are row-major because the hot loops walk inequalities.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

// Exact dot product of two equally sized vector expressions.
template <typename DerivedA, typename DerivedB>
Rational dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Rational acc;
  for (Eigen::Index i = 0; i < a.size(); ++i) add_product(acc, a(i), b(i));
  return acc;
}

// Exact matrix-vector product.
QVector multiply(const QMatrix& m, const QVector& x);

// Rescales v by the unique positive rational that turns it into a vector of
// coprime integers. The zero vector is returned unchanged.
QVector primitive(const QVector& v);

// Lexicographic comparison on entries.
bool lex_less(const QVector& a, const QVector& b);

namespace detail {
std::vector<QVector> kernel_basis(const QMatrix& m);
std::optional<QVector> solve_linear(const QMatrix& m, const QVector& rhs);
std::size_t rank(const QMatrix& m);
}  // namespace detail

// Basis of {x : Mx = 0}. Vectors are primitive integer vectors with a
// positive leading non-zero entry. A matrix without rows yields the standard
// basis.
template <typename Derived>
std::vector<QVector> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return detail::kernel_basis(QMatrix(m));
}

// One exact solution of Mx = rhs (free variables set to zero), or empty when
// the system is inconsistent.
template <typename DerivedM, typename DerivedR>
std::optional<QVector> solve_linear(const Eigen::MatrixBase<DerivedM>& m,
                                    const Eigen::MatrixBase<DerivedR>& rhs) {
  return detail::solve_linear(QMatrix(m), QVector(rhs));
}

template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  return detail::rank(QMatrix(m));
}

// Stacks vectors as the rows of a matrix with `cols` columns.
QMatrix rows_to_matrix(const std::vector<QVector>& rows, Eigen::Index cols);

}  // namespace symilp

#endif  // SYMILP_LINALG_HPP_
