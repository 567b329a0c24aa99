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

#include <random>

#include "gtest/gtest.h"

namespace symilp {
namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = static_cast<Eigen::Index>(rows.begin()->size());
  QMatrix out(m, n);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long long v : r) out(i, j++) = Rational(v);
    ++i;
  }
  return out;
}

QVector vec(std::initializer_list<long long> values) {
  QVector out(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long long v : values) out(i++) = Rational(v);
  return out;
}

TEST(KernelBasisTest, DifferenceRows) {
  const auto basis = kernel_basis(mat({{1, -1, 0}, {0, 1, -1}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], vec({1, 1, 1}));
}

TEST(KernelBasisTest, IdentityHasNoKernel) {
  EXPECT_TRUE(kernel_basis(QMatrix::Identity(2, 2)).empty());
}

TEST(KernelBasisTest, ZeroRowGivesStandardBasis) {
  const auto basis = kernel_basis(mat({{0, 0}}));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], vec({1, 0}));
  EXPECT_EQ(basis[1], vec({0, 1}));
}

TEST(KernelBasisTest, CanonicalScaling) {
  QMatrix m(1, 3);
  m << Rational(1, 2), Rational(1, 3), Rational(-1);
  for (const QVector& v : kernel_basis(m)) {
    EXPECT_EQ(primitive(v), v);
    Eigen::Index lead = 0;
    while (v(lead).is_zero()) ++lead;
    EXPECT_GT(v(lead).sign(), 0);
    EXPECT_TRUE(dot(m.row(0), v).is_zero());
  }
}

TEST(SolveLinearTest, Examples) {
  auto x = solve_linear(QMatrix::Identity(3, 3), vec({1, 2, 3}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec({1, 2, 3}));
  x = solve_linear(mat({{1, 1}}), vec({2}));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0) + (*x)(1), Rational(2));
  EXPECT_FALSE(solve_linear(mat({{1}, {1}}), vec({0, 1})));
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(QMatrix::Identity(4, 4)), 4u);
  EXPECT_EQ(rank(QMatrix::Constant(3, 3, Rational(0))), 0u);
  EXPECT_EQ(rank(mat({{1, 2}, {2, 4}})), 1u);
}

TEST(PrimitiveTest, ScalesToCoprimeIntegers) {
  QVector v(3);
  v << Rational(2, 3), Rational(4, 3), Rational(0);
  EXPECT_EQ(primitive(v), vec({1, 2, 0}));
  EXPECT_EQ(primitive(vec({-6, 4})), vec({-3, 2}));
  EXPECT_EQ(primitive(vec({0, 0})), vec({0, 0}));
}

// Random integer matrices with planted dependencies.
TEST(LinalgPropertyTest, RankNullityAndSolutions) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 200; ++t) {
    const int m = dim(rng);
    const int n = dim(rng);
    QMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
    }
    if (m > 1 && t % 3 == 0) a.row(m - 1) = a.row(0) * Rational(3) - a.row(m - 2);
    const auto basis = kernel_basis(a);
    EXPECT_EQ(rank(a) + basis.size(), static_cast<std::size_t>(n));
    for (const QVector& v : basis) {
      EXPECT_EQ(multiply(a, v), QVector::Constant(m, Rational(0)));
    }
    if (!basis.empty()) EXPECT_EQ(rank(rows_to_matrix(basis, n)), basis.size());
    QVector x0(n);
    for (int j = 0; j < n; ++j) x0(j) = Rational(entry(rng));
    const QVector rhs = multiply(a, x0);
    const auto x = solve_linear(a, rhs);
    ASSERT_TRUE(x);
    EXPECT_EQ(multiply(a, *x), rhs);
  }
}

}  // namespace
}  // namespace symilp
