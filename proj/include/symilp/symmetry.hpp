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

// Signed permutations and the finite groups they generate.

#ifndef SYMILP_SYMMETRY_HPP_
#define SYMILP_SYMMETRY_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symilp/model.hpp"

namespace symilp {

// Element of O_n(Z). Entry j of the image is the signed 1-based index i with
// e_{j+1} -> sign * e_{|i|}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  // Throws kParse unless |image| is a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> image);

  static SignedPermutation identity(int n);
  // 0-based plain permutation: e_j -> e_{perm[j]}.
  static SignedPermutation from_permutation(const std::vector<int>& perm);
  // Plain cycle on 0-based coordinates.
  static SignedPermutation cycle(int n, const std::vector<int>& points);

  int degree() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  // 0-based target coordinate and sign of e_j.
  int target(int j) const {
    const int v = image_[static_cast<std::size_t>(j)];
    return (v < 0 ? -v : v) - 1;
  }
  int sign(int j) const { return image_[static_cast<std::size_t>(j)] < 0 ? -1 : 1; }

  // (*this) after `rhs`: x -> this(rhs(x)).
  SignedPermutation operator*(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;
  bool is_identity() const;
  // True iff no sign changes.
  bool is_plain() const;

  QMatrix matrix() const;
  std::string str() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> image_;
};

// gamma x.
QVector apply(const SignedPermutation& gamma, const QVector& x);

// The row action (a gamma | b) on a raw row (a_1..a_n, b). Entry j of
// a gamma is sign_j * a_{target_j}.
RawRow act_on_row(const SignedPermutation& gamma, const RawRow& row);

// gamma is a symmetry iff it maps the row set of (A|b) onto itself and
// c^T gamma = c^T.
bool is_symmetry(const ILPInstance& inst, const SignedPermutation& gamma);

// Index of the stored row equal to (a_i gamma | b_i), or -1.
Eigen::Index find_image_row(const ILPInstance& inst, const SignedPermutation& gamma,
                            Eigen::Index i);

class GroupSpec {
 public:
  // An empty generator list stands for the trivial group.
  GroupSpec(int degree, std::vector<SignedPermutation> generators);

  int degree() const { return degree_; }
  const std::vector<SignedPermutation>& generators() const { return generators_; }

 private:
  int degree_;
  std::vector<SignedPermutation> generators_;
};

// Basis of the common fixed space of all generators.
std::vector<QVector> fixed_space(const GroupSpec& group);

// Matrix E with ker E = Fix, one row per missing fixed dimension.
QMatrix fixing_equations(const GroupSpec& group);

// Barycenter of the orbit of x.
QVector project_barycenter(const GroupSpec& group, const QVector& x);

// Orbit of x under the group, sorted lexicographically.
std::vector<QVector> vector_orbit(const GroupSpec& group, const QVector& x);

struct BasisOrbit {
  // Signed 1-based indices, sorted by (|i|, sign) with +i before -i.
  std::vector<int> members;
  bool bipolar = false;
};

std::vector<BasisOrbit> basis_orbits(const GroupSpec& group);

// Barycenter of a basis orbit as a vector of length n.
QVector orbit_barycenter(const BasisOrbit& orbit, int n);

struct Conjugation {
  SignedPermutation epsilon;  // diagonal sign matrix
  GroupSpec conjugate;        // epsilon * g * epsilon^-1 for each generator g
};

// Present iff the action on signed basis vectors has exactly two opposite
// unipolar orbits of length n.
std::optional<Conjugation> conjugate_to_permutations(const GroupSpec& group);

// All elements, by closure. Throws kSearchBudgetExceeded past `limit`.
std::vector<SignedPermutation> group_elements(const GroupSpec& group,
                                              std::size_t limit = 1'000'000);

// Every signed permutation passing is_symmetry, sorted. Cost 2^n n! checks.
std::vector<SignedPermutation> brute_force_symmetries(const ILPInstance& inst);

enum class SymmetryLevel { kFullSymmetric, kAlternating, kTransitiveOnly, kNone };

const char* level_name(SymmetryLevel level);

// Sym(n) is tested through (1 2) and (1 2 ... n); for n >= 5, Alt(n) through
// (1 2 3) and (1 2 ... n) for odd n or (2 3 ... n) for even n. Otherwise the
// coordinate action of the detected symmetry group is tested for
// transitivity.
SymmetryLevel verify_symmetric_group_invariance(const ILPInstance& inst);

// Whether `level` guarantees a (floor(n/2)+1)-transitive action on the
// standard basis. Alt(n) is (n-2)-transitive, which suffices only for n >= 5.
bool certifies_transitivity(SymmetryLevel level, int n);

// Generator files: one generator per line as n signed integers, '#' comments.
GroupSpec read_generators(std::istream& in, int degree);
GroupSpec read_generators_file(const std::string& path, int degree);
void write_generators(std::ostream& out, const GroupSpec& group);

}  // namespace symilp

#endif  // SYMILP_SYMMETRY_HPP_
