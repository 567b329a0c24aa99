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

#ifndef SYMILP_TESTS_TEST_UTIL_HPP_
#define SYMILP_TESTS_TEST_UTIL_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "symilp/instances.hpp"
#include "symilp/model.hpp"
#include "symilp/symmetry.hpp"

namespace symilp::testing {

inline QVector vec(std::initializer_list<long long> values) {
  QVector out(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long long v : values) out(i++) = Rational(v);
  return out;
}

inline QVector ones(Eigen::Index n) { return QVector::Constant(n, Rational(1)); }

// Each row lists a_1..a_n followed by b.
inline ILPInstance make_instance(std::initializer_list<std::initializer_list<long long>> rows,
                                 const QVector& c, std::string name = "test") {
  std::vector<RawRow> raw;
  for (const auto& r : rows) raw.push_back(vec(r));
  return normalize(raw, c, std::move(name));
}

inline ILPInstance example61() {
  return make_instance({{1, 2, 0, 3}, {0, 1, 2, 3}, {2, 0, 1, 3}}, ones(3), "example61");
}

inline ILPInstance example61_nonneg() {
  return make_instance({{1, 2, 0, 3}, {0, 1, 2, 3}, {2, 0, 1, 3}, {-1, 0, 0, 0}, {0, -1, 0, 0},
                        {0, 0, -1, 0}},
                       ones(3), "example61-nonneg");
}

inline ILPInstance unit_square() {
  return make_instance({{1, 0, 1}, {0, 1, 1}, {-1, 0, 0}, {0, -1, 0}}, ones(2), "square");
}

// Generators (1 2) and (1 2 ... n) of Sym(n).
inline GroupSpec symmetric_group(int n) {
  std::vector<SignedPermutation> gens;
  if (n >= 2) {
    std::vector<int> swap(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) swap[static_cast<std::size_t>(j)] = j;
    std::swap(swap[0], swap[1]);
    gens.push_back(SignedPermutation::from_permutation(swap));
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) all[static_cast<std::size_t>(j)] = j;
    gens.push_back(SignedPermutation::cycle(n, all));
  }
  return GroupSpec(n, gens);
}

// Random Sym(n)-invariant instances with 2 <= n <= 6, cycling through n.
inline std::vector<ILPInstance> symmetric_corpus(int count, std::uint64_t seed = 1) {
  std::vector<ILPInstance> out;
  for (int t = 0; t < count; ++t) {
    out.push_back(gen_random_symmetric(2 + t % 5, seed + static_cast<std::uint64_t>(t)));
  }
  return out;
}

}  // namespace symilp::testing

#endif  // SYMILP_TESTS_TEST_UTIL_HPP_
