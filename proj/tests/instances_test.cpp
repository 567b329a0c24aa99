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

#include "symilp/instances.hpp"

#include <cmath>
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "symilp/corepoint.hpp"
#include "symilp/errors.hpp"
#include "symilp/lp.hpp"
#include "test_util.hpp"

namespace symilp {
namespace {

using testing::ones;
using testing::vec;

bool has_row(const ILPInstance& inst, const RawRow& row) {
  for (Eigen::Index i = 0; i < inst.rows(); ++i) {
    if (inst.raw_row(i) == row) return true;
  }
  return false;
}

TEST(HtcTest, SixTwoHalf) {
  const ILPInstance inst = gen_hypertruncated_cube({6, 2, Rational(1, 2)});
  EXPECT_EQ(inst.rows(), 24);
  EXPECT_EQ(inst.name(), "htc-n6-r2");
  EXPECT_TRUE(inst.objective_is_ones());
  EXPECT_TRUE(has_row(inst, vec({-1, 1, 1, 1, 1, 1, 2})));
  EXPECT_TRUE(has_row(inst, vec({1, 1, 1, 1, 1, -1, 2})));
  EXPECT_TRUE(has_row(inst, vec({3, 1, 1, 1, 1, 1, 4})));
  EXPECT_TRUE(has_row(inst, vec({1, 0, 0, 0, 0, 0, 1})));
  EXPECT_TRUE(has_row(inst, vec({0, -1, 0, 0, 0, 0, 0})));
  EXPECT_EQ(htc_vertices({6, 2, Rational(1, 2)}).vertices.size(), 23u);
}

TEST(HtcTest, StandardParameters) {
  const HtcParams p = HtcParams::standard(100);
  EXPECT_EQ(p.r, 36);
  EXPECT_EQ(p.lambda, Rational(1, 2));
  EXPECT_EQ(gen_hypertruncated_cube(p).rows(), 400);
  EXPECT_EQ(HtcParams::standard(2000).r, 735);
}

TEST(HtcTest, BadParams) {
  for (const HtcParams& p : {HtcParams{6, 1, Rational(1, 2)}, HtcParams{6, 6, Rational(1, 2)},
                             HtcParams{6, 3, Rational(1, 2)}, HtcParams{6, 2, Rational(1)}}) {
    try {
      gen_hypertruncated_cube(p);
      ADD_FAILURE() << p.n << " " << p.r << " " << p.lambda;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadParams);
    }
  }
}

// Each row is valid at every vertex. For r <= n-2 each is tight at n affinely
// independent vertices. For r = n-1 the truncating facet is a simplex, the
// deletion rows only touch a lower-dimensional face, and 3n facets remain.
TEST(HtcPropertyTest, FacetCertificates) {
  for (int n = 3; n <= 8; ++n) {
    for (int r = 2; r < n; ++r) {
      for (const Rational& lambda : {Rational(r, n) + Rational(1, 7 * n), Rational(9, 10)}) {
        if (!(lambda > Rational(r, n)) || !(lambda < Rational(1))) continue;
        const HtcParams p{n, r, lambda};
        const ILPInstance inst = gen_hypertruncated_cube(p);
        ASSERT_EQ(inst.rows(), 4 * n) << n << " " << r;
        const auto verts = htc_vertices(p).vertices;
        std::size_t expected_vertices = 1;
        long long binom = 1;
        for (int s = 1; s <= r; ++s) {
          binom = binom * (n - s + 1) / s;
          expected_vertices += static_cast<std::size_t>(binom);
        }
        EXPECT_EQ(verts.size(), expected_vertices + 1);
        int facets = 0;
        for (Eigen::Index i = 0; i < inst.rows(); ++i) {
          std::vector<QVector> tight;
          for (const QVector& v : verts) {
            const Rational lhs = dot(inst.A().row(i), v);
            EXPECT_LE(lhs, inst.b()(i));
            if (lhs == inst.b()(i)) {
              QVector h(n + 1);
              h.head(n) = v;
              h(n) = Rational(1);
              tight.push_back(h);
            }
          }
          const std::size_t dim = tight.empty() ? 0 : rank(rows_to_matrix(tight, n + 1));
          facets += dim == static_cast<std::size_t>(n);
        }
        EXPECT_EQ(facets, r <= n - 2 ? 4 * n : 3 * n) << "n=" << n << " r=" << r;
      }
    }
  }
}

TEST(HtcPropertyTest, CorePointMatchesBruteForce) {
  for (int n = 4; n <= 10; ++n) {
    HtcParams p = HtcParams::standard(n);
    if (p.r < 2) p.r = 2;
    if (!(p.lambda > Rational(p.r, n))) p.lambda = Rational(3, 4);
    const ILPInstance inst = gen_hypertruncated_cube(p);
    const ILPOutcome core = solve_core_point(inst);
    const ILPOutcome brute = brute_force_ilp(inst, IntegerBox::uniform(static_cast<std::size_t>(n), 0, 1));
    ASSERT_EQ(core.status, ILPStatus::kOptimal);
    ASSERT_EQ(brute.status, ILPStatus::kOptimal);
    EXPECT_EQ(*core.value, *brute.value) << n;
    EXPECT_EQ(*core.value, Rational(p.r)) << n;
  }
}

TEST(RoundingTest, ConstructionValues) {
  EXPECT_EQ(round_decimal(Rational(56, 6), 3), Rational::parse("9.333"));
  EXPECT_EQ(round_sqrt3_multiple(Rational(28, 6), 3), Rational::parse("8.083"));
  EXPECT_EQ(round_sqrt3_multiple(Rational(-28, 6), 3), Rational::parse("-8.083"));
  EXPECT_EQ(round_decimal(Rational(-11, 12), 3), Rational::parse("-0.917"));
  EXPECT_EQ(round_decimal(Rational(73, 10), 3), Rational::parse("7.3"));
}

TEST(RoundingPropertyTest, Sqrt3AgreesWithFloatingPoint) {
  for (int p = -300; p <= 300; ++p) {
    const Rational q(p, 7);
    const double approx = std::round(std::abs(p / 7.0 * std::sqrt(3.0)) * 1000.0) / 1000.0;
    const double got = round_sqrt3_multiple(q, 3).to_double();
    EXPECT_NEAR(std::abs(got), approx, 1e-9) << p;
  }
}

TEST(WildTest, VerticesAreRounded) {
  const VRep v = wild_vertices(3);
  ASSERT_EQ(v.vertices.size(), 12u);
  for (const QVector& x : v.vertices) {
    ASSERT_EQ(x.size(), 6);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      EXPECT_TRUE((Rational(1000) * x(j)).is_integer());
    }
  }
  EXPECT_EQ(v.vertices[0], (QVector(6) << Rational::parse("9.333"), Rational(0), Rational(0),
                            Rational(0), Rational(0), Rational(1))
                               .finished());
}

TEST(WildTest, FacetsValidAndCounted) {
  for (int d = 3; d <= 5; ++d) {
    const auto facets = wild_facets(d);
    EXPECT_EQ(facets.size(), static_cast<std::size_t>(6 + (1 << d)));
    const auto verts = wild_vertices(d).vertices;
    const int n = d + 3;
    for (const RawRow& f : facets) {
      EXPECT_EQ(primitive(f), f);
      int tight = 0;
      for (const QVector& v : verts) {
        const Rational lhs = dot(f.head(n), v);
        EXPECT_LE(lhs, f(n));
        tight += lhs == f(n);
      }
      EXPECT_GE(tight, n);
    }
  }
}

TEST(WildTest, KnownRowForDThree) {
  const ILPInstance inst = gen_wild(3);
  EXPECT_EQ(inst.rows(), 1020);
  EXPECT_EQ(inst.name(), "wild-d3");
  EXPECT_TRUE(has_row(inst, vec({0, 0, 1917, -1917, -1917, 7300, 7300})));
  EXPECT_TRUE(is_symmetry(inst, SignedPermutation::from_permutation({1, 0, 2, 3, 4, 5})));
  EXPECT_TRUE(is_symmetry(inst, SignedPermutation::cycle(6, {0, 1, 2, 3, 4, 5})));
}

// Orbit sizes from coefficient multiplicities: n! / prod(mult!).
TEST(WildTest, OrbitCountingDThree) {
  const auto facets = wild_facets(3);
  const int n = 6;
  std::set<std::pair<std::vector<Rational>, Rational>> reps;
  for (const RawRow& f : facets) {
    std::vector<Rational> coeffs(f.data(), f.data() + n);
    std::sort(coeffs.begin(), coeffs.end());
    reps.emplace(coeffs, f(n));
  }
  long long expected = 0;
  for (const auto& [coeffs, rhs] : reps) {
    std::map<Rational, int> mult;
    for (const Rational& c : coeffs) ++mult[c];
    long long count = 720;
    for (const auto& [value, k] : mult) {
      for (int i = 2; i <= k; ++i) count /= i;
    }
    expected += count;
  }
  EXPECT_EQ(static_cast<long long>(gen_wild(3).rows()), expected);
  EXPECT_EQ(expected, 1020);
}

TEST(SymmetrizeTest, Examples) {
  EXPECT_EQ(symmetrize_rows({vec({1, 2, 0, 3})}).size(), 6u);
  EXPECT_EQ(symmetrize_rows({vec({1, 1, 1, 3})}).size(), 1u);
  EXPECT_EQ(symmetrize_rows({vec({1, 1, 0, 3}), vec({0, 1, 1, 3})}).size(), 3u);
  const ILPInstance sym = symmetrize(testing::example61());
  EXPECT_EQ(sym.rows(), 6);
  EXPECT_EQ(verify_symmetric_group_invariance(sym), SymmetryLevel::kFullSymmetric);
}

TEST(RandomSymmetricTest, IsSymmetricAndDeterministic) {
  for (int n = 2; n <= 6; ++n) {
    const ILPInstance a = gen_random_symmetric(n, 77);
    const ILPInstance b = gen_random_symmetric(n, 77);
    EXPECT_EQ(a.raw_rows(), b.raw_rows());
    EXPECT_EQ(verify_symmetric_group_invariance(a), SymmetryLevel::kFullSymmetric);
    EXPECT_NO_THROW(default_box(a));
  }
}

}  // namespace
}  // namespace symilp
