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

// Benchmark instance generators.

#ifndef SYMILP_INSTANCES_HPP_
#define SYMILP_INSTANCES_HPP_

#include <cstdint>
#include <vector>

#include "symilp/model.hpp"

namespace symilp {

// Hypertruncated cube conv({x in [0,1]^n : sum x <= r} u {lambda 1}).
struct HtcParams {
  int n = 0;
  int r = 0;
  Rational lambda;

  // r = floor(n / e), lambda = 1/2.
  static HtcParams standard(int n);
};

// Throws kBadParams unless 2 <= r <= n-1 and r/n < lambda < 1.
void validate(const HtcParams& p);

// The 4n facets: 0 <= x_i <= 1, the deletion family
//   (1 - n + r/lambda) x_i + sum_{k != i} x_k <= r
// and the contraction family
//   (1 - r + lambda (n-1)) x_i + (1 - lambda) sum_{k != i} x_k <= lambda (n - r),
// each oriented so that every vertex satisfies it. Objective 1.
ILPInstance gen_hypertruncated_cube(const HtcParams& p);

struct VRep {
  std::vector<QVector> vertices;
};

// e_S for |S| <= r, followed by lambda 1.
VRep htc_vertices(const HtcParams& p);

// Rounds p * sqrt(3) half away from zero to `places` decimals. Throws
// kDegenerateFacet on an exact tie.
Rational round_sqrt3_multiple(const Rational& p, int places);

// Vertices of the distorted join of the regular hexagon of radius 56/6 and
// the d-dimensional cross polytope of radius 73/10 in dimension d + 3, with
// coordinates (x_1, x_2, y_1..y_d, t): hexagon at t = 1, cross polytope at
// t = -11/12. Every coordinate is rounded to three decimals.
VRep wild_vertices(int d);

// The 6 + 2^d facets of the rounded join as primitive raw rows a x <= b:
// six hexagon edges joined with the whole cross polytope, then the whole
// hexagon joined with each facet of the cross polytope. Throws
// kDegenerateFacet if a vertex set does not span a unique valid hyperplane.
std::vector<RawRow> wild_facets(int d);

// Union of the Sym(n) orbits of the rows (coefficients permuted, rhs kept).
std::vector<RawRow> symmetrize_rows(const std::vector<RawRow>& rows);
ILPInstance symmetrize(const ILPInstance& inst);

// Symmetrized wild instance for d >= 3. Objective 1.
ILPInstance gen_wild(int d);

// A small random Sym(n)-invariant instance with objective 1: a uniform box
// plus the orbits of one or two random rows with few distinct entries.
ILPInstance gen_random_symmetric(int n, std::uint64_t seed);

}  // namespace symilp

#endif  // SYMILP_INSTANCES_HPP_
