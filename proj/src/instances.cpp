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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "symilp/errors.hpp"

namespace symilp {
namespace {

RawRow pattern_row(int n, int i, const Rational& own, const Rational& other, const Rational& rhs) {
  RawRow row(n + 1);
  for (int k = 0; k < n; ++k) row(k) = k == i ? own : other;
  row(n) = rhs;
  return row;
}

mpz_class pow10(int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return scale;
}

// round_decimal with a tie check.
Rational round3(const Rational& v) {
  const mpz_class scale = pow10(3);
  const Rational scaled = abs(v) * Rational(scale);
  if (scaled - Rational(scaled.floor()) == Rational(1, 2)) {
    throw Error(ErrorCode::kDegenerateFacet, "rounding tie at " + v.str());
  }
  return round_decimal(v, 3);
}

}  // namespace

HtcParams HtcParams::standard(int n) {
  return HtcParams{n, static_cast<int>(std::floor(n / std::numbers::e)), Rational(1, 2)};
}

void validate(const HtcParams& p) {
  if (p.r < 2 || p.r > p.n - 1) {
    throw Error(ErrorCode::kBadParams, "need 2 <= r <= n-1, got n=" + std::to_string(p.n) +
                                           " r=" + std::to_string(p.r));
  }
  if (!(p.lambda > Rational(p.r, p.n)) || !(p.lambda < Rational(1))) {
    throw Error(ErrorCode::kBadParams, "need r/n < lambda < 1, got lambda=" + p.lambda.str());
  }
}

ILPInstance gen_hypertruncated_cube(const HtcParams& p) {
  validate(p);
  const int n = p.n;
  const Rational& lam = p.lambda;
  // Rows of one family share the pattern (own, other | rhs); scaling the
  // pattern once keeps every row primitive without per-row gcd work.
  const QVector deletion = primitive(
      (QVector(3) << Rational(1 - n) + Rational(p.r) / lam, Rational(1), Rational(p.r)).finished());
  const QVector contraction =
      primitive((QVector(3) << Rational(1 - p.r) + lam * Rational(n - 1), Rational(1) - lam,
                 lam * Rational(n - p.r))
                    .finished());
  std::vector<RawRow> rows;
  rows.reserve(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < n; ++i) {
    rows.push_back(pattern_row(n, i, Rational(1), Rational(0), Rational(1)));
    rows.push_back(pattern_row(n, i, Rational(-1), Rational(0), Rational(0)));
    rows.push_back(pattern_row(n, i, deletion(0), deletion(1), deletion(2)));
    rows.push_back(pattern_row(n, i, contraction(0), contraction(1), contraction(2)));
  }
  return normalize(rows, QVector::Constant(n, Rational(1)),
                   "htc-n" + std::to_string(n) + "-r" + std::to_string(p.r));
}

VRep htc_vertices(const HtcParams& p) {
  validate(p);
  VRep out;
  const int n = p.n;
  for (int size = 0; size <= p.r; ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      QVector v(n);
      for (int j = 0; j < n; ++j) v(j) = Rational(pick[static_cast<std::size_t>(j)] ? 1 : 0);
      out.vertices.push_back(std::move(v));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  out.vertices.push_back(QVector::Constant(n, p.lambda));
  return out;
}

Rational round_sqrt3_multiple(const Rational& p, int places) {
  if (p.is_zero()) return Rational(0);
  const mpz_class scale = pow10(places);
  // w = |p| sqrt(3) 10^places; find N with N - 1/2 <= w < N + 1/2 by
  // comparing squares: w^2 = 3 p^2 10^(2 places).
  const Rational w_sq = Rational(3) * p * p * Rational(mpz_class(scale * scale));
  auto half_sq = [](const mpz_class& n) {  // (n + 1/2)^2
    return Rational(mpz_class((2 * n + 1) * (2 * n + 1)), mpz_class(4));
  };
  mpz_class n(std::floor(std::sqrt(w_sq.to_double()) + 0.5));
  while (half_sq(n) <= w_sq) ++n;
  while (n > 0 && half_sq(mpz_class(n - 1)) > w_sq) --n;
  if (half_sq(mpz_class(n - 1)) == w_sq) {
    throw Error(ErrorCode::kDegenerateFacet, "rounding tie at " + p.str() + " sqrt(3)");
  }
  if (p.sign() < 0) n = -n;
  return Rational(n, scale);
}

VRep wild_vertices(int d) {
  if (d < 3) throw Error(ErrorCode::kBadParams, "wild instances need d >= 3");
  const int n = d + 3;
  const Rational radius(56, 6);
  // cos(k pi/3) is rational and sin(k pi/3) = s sqrt(3)/2 with s in {0, 1, -1}.
  const int cos2[6] = {2, 1, -1, -2, -1, 1};  // 2 cos(k pi/3)
  const int sin_sign[6] = {0, 1, 1, 0, -1, -1};
  VRep out;
  for (int k = 0; k < 6; ++k) {
    QVector v = QVector::Constant(n, Rational(0));
    v(0) = round3(radius * Rational(cos2[k], 2));
    v(1) = round_sqrt3_multiple(radius * Rational(sin_sign[k], 2), 3);
    v(n - 1) = round3(Rational(1));
    out.vertices.push_back(std::move(v));
  }
  const Rational lift = round3(Rational(-11, 12));
  const Rational cross = round3(Rational(73, 10));
  for (int i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      QVector v = QVector::Constant(n, Rational(0));
      v(2 + i) = s > 0 ? cross : -cross;
      v(n - 1) = lift;
      out.vertices.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<RawRow> wild_facets(int d) {
  const VRep vrep = wild_vertices(d);
  const int n = d + 3;
  const std::vector<QVector>& all = vrep.vertices;
  QVector bary = QVector::Constant(n, Rational(0));
  for (const QVector& v : all) bary += v;
  for (int j = 0; j < n; ++j) bary(j) /= Rational(static_cast<long long>(all.size()));

  // Vertex index sets: hexagon 0..5, cross vertex (i, +) at 6+2i, (i, -) at 7+2i.
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<std::size_t> s{k, (k + 1) % 6};
    for (std::size_t c = 6; c < all.size(); ++c) s.push_back(c);
    sets.push_back(std::move(s));
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<std::size_t> s{0, 1, 2, 3, 4, 5};
    for (int i = 0; i < d; ++i) s.push_back(6 + 2 * static_cast<std::size_t>(i) + ((mask >> i) & 1));
    sets.push_back(std::move(s));
  }

  std::vector<RawRow> rows;
  for (const auto& s : sets) {
    QMatrix m(static_cast<Eigen::Index>(s.size()), n + 1);
    for (std::size_t r = 0; r < s.size(); ++r) {
      m.row(static_cast<Eigen::Index>(r)).head(n) = all[s[r]].transpose();
      m(static_cast<Eigen::Index>(r), n) = Rational(-1);
    }
    std::vector<QVector> ker = kernel_basis(m);
    if (ker.size() != 1) {
      throw Error(ErrorCode::kDegenerateFacet,
                  "facet vertex set spans a " + std::to_string(ker.size()) + "-dimensional solution space");
    }
    QVector row = ker[0];
    const Rational side = dot(row.head(n), bary) - row(n);
    if (side.is_zero()) throw Error(ErrorCode::kDegenerateFacet, "facet hyperplane meets the barycenter");
    if (side.sign() > 0) row = -row;
    for (const QVector& v : all) {
      if (dot(row.head(n), v) > row(n)) throw Error(ErrorCode::kDegenerateFacet, "facet is not valid");
    }
    rows.push_back(primitive(row));
  }
  return rows;
}

std::vector<RawRow> symmetrize_rows(const std::vector<RawRow>& rows) {
  struct Less {
    bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
  };
  std::set<QVector, Less> classes;
  for (const RawRow& row : rows) {
    RawRow key = row;
    const Eigen::Index n = row.size() - 1;
    std::sort(key.data(), key.data() + n);
    classes.insert(std::move(key));
  }
  std::vector<RawRow> out;
  for (const RawRow& key : classes) {
    RawRow row = key;
    const Eigen::Index n = row.size() - 1;
    do {
      out.push_back(row);
    } while (std::next_permutation(row.data(), row.data() + n));
  }
  return out;
}

ILPInstance symmetrize(const ILPInstance& inst) {
  return normalize(symmetrize_rows(inst.raw_rows()), inst.c(), inst.name());
}

ILPInstance gen_wild(int d) {
  const int n = d + 3;
  return normalize(symmetrize_rows(wild_facets(d)), QVector::Constant(n, Rational(1)),
                   "wild-d" + std::to_string(d));
}

ILPInstance gen_random_symmetric(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kBadParams, "dimension must be positive");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto nonzero = [&](int lim) {
    int v = 0;
    while (v == 0) v = uniform(-lim, lim);
    return v;
  };
  std::vector<RawRow> rows;
  const int upper = uniform(1, 3);
  const int lower = uniform(0, 2);
  for (int i = 0; i < n; ++i) {
    rows.push_back(pattern_row(n, i, Rational(1), Rational(0), Rational(upper)));
    rows.push_back(pattern_row(n, i, Rational(-1), Rational(0), Rational(lower)));
  }
  const int seeds = uniform(1, 2);
  for (int s = 0; s < seeds; ++s) {
    RawRow row = RawRow::Constant(n + 1, Rational(0));
    const int first = uniform(1, std::min(2, n));
    const int second = uniform(0, std::min(2, n - first));
    const int a = nonzero(3);
    const int b = nonzero(3);
    for (int j = 0; j < first; ++j) row(j) = Rational(a);
    for (int j = first; j < first + second; ++j) row(j) = Rational(b);
    row(n) = Rational(uniform(-4, 6));
    rows.push_back(std::move(row));
  }
  if (uniform(0, 2) == 0) {
    // A lower bound on the coordinate sum, sometimes out of reach.
    rows.push_back(pattern_row(n, 0, Rational(-1), Rational(-1), Rational(-uniform(0, n * upper + 1))));
  }
  return normalize(symmetrize_rows(rows), QVector::Constant(n, Rational(1)),
                   "random-n" + std::to_string(n) + "-s" + std::to_string(seed));
}

}  // namespace symilp
