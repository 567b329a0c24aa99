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

#include "symilp/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "symilp/errors.hpp"
#include "symilp/symdetect.hpp"

namespace symilp {

SignedPermutation::SignedPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    const int t = v < 0 ? -v : v;
    if (t < 1 || t > n || seen[static_cast<std::size_t>(t - 1)]) {
      throw Error(ErrorCode::kParse, "not a signed permutation of degree " + std::to_string(n));
    }
    seen[static_cast<std::size_t>(t - 1)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  SignedPermutation g;
  g.image_ = std::move(image);
  return g;
}

SignedPermutation SignedPermutation::from_permutation(const std::vector<int>& perm) {
  std::vector<int> image(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) image[j] = perm[j] + 1;
  return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::cycle(int n, const std::vector<int>& points) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    perm[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  }
  return from_permutation(perm);
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  if (rhs.degree() != degree()) throw Error(ErrorCode::kDimensionMismatch, "compose");
  SignedPermutation out;
  out.image_.resize(image_.size());
  for (int j = 0; j < degree(); ++j) {
    const int mid = rhs.target(j);
    out.image_[static_cast<std::size_t>(j)] = rhs.sign(j) * sign(mid) * (target(mid) + 1);
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.image_.resize(image_.size());
  for (int j = 0; j < degree(); ++j) {
    out.image_[static_cast<std::size_t>(target(j))] = sign(j) * (j + 1);
  }
  return out;
}

bool SignedPermutation::is_identity() const {
  for (int j = 0; j < degree(); ++j) {
    if (image_[static_cast<std::size_t>(j)] != j + 1) return false;
  }
  return true;
}

bool SignedPermutation::is_plain() const {
  return std::all_of(image_.begin(), image_.end(), [](int v) { return v > 0; });
}

QMatrix SignedPermutation::matrix() const {
  QMatrix m = QMatrix::Constant(degree(), degree(), Rational(0));
  for (int j = 0; j < degree(); ++j) m(target(j), j) = Rational(sign(j));
  return m;
}

std::string SignedPermutation::str() const {
  std::string out;
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (j) out.push_back(' ');
    out += std::to_string(image_[j]);
  }
  return out;
}

QVector apply(const SignedPermutation& gamma, const QVector& x) {
  if (x.size() != gamma.degree()) throw Error(ErrorCode::kDimensionMismatch, "apply");
  QVector y(x.size());
  for (int j = 0; j < gamma.degree(); ++j) {
    y(gamma.target(j)) = gamma.sign(j) < 0 ? -x(j) : x(j);
  }
  return y;
}

RawRow act_on_row(const SignedPermutation& gamma, const RawRow& row) {
  const int n = gamma.degree();
  if (row.size() != n + 1) throw Error(ErrorCode::kDimensionMismatch, "act_on_row");
  RawRow out(n + 1);
  for (int j = 0; j < n; ++j) {
    const Rational& v = row(gamma.target(j));
    out(j) = gamma.sign(j) < 0 ? -v : v;
  }
  out(n) = row(n);
  return out;
}

namespace {

// Three-way comparison of the image (a_i gamma | b_i) with the stored row k.
int compare_image_row(const ILPInstance& inst, const SignedPermutation& gamma, Eigen::Index i,
                      Eigen::Index k) {
  const QMatrix& a = inst.A();
  for (int j = 0; j < gamma.degree(); ++j) {
    const Rational& src = a(i, gamma.target(j));
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (gamma.sign(j) > 0) {
      cmp = src <=> a(k, j);
    } else {
      cmp = (-src) <=> a(k, j);
    }
    if (cmp != 0) return cmp < 0 ? -1 : 1;
  }
  const auto cmp = inst.b()(i) <=> inst.b()(k);
  return cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
}

}  // namespace

bool is_symmetry(const ILPInstance& inst, const SignedPermutation& gamma) {
  const int n = gamma.degree();
  if (n != inst.cols()) throw Error(ErrorCode::kDimensionMismatch, "is_symmetry");
  for (int j = 0; j < n; ++j) {
    const Rational& ct = inst.c()(gamma.target(j));
    if (!((gamma.sign(j) < 0 ? -ct : ct) == inst.c()(j))) return false;
  }
  if (gamma.is_identity()) return true;
  // Images of distinct rows are distinct, so membership of every image in the
  // sorted row set is equivalent to equality of the row sets.
  for (Eigen::Index i = 0; i < inst.rows(); ++i) {
    if (find_image_row(inst, gamma, i) < 0) return false;
  }
  return true;
}

Eigen::Index find_image_row(const ILPInstance& inst, const SignedPermutation& gamma,
                            Eigen::Index i) {
  Eigen::Index lo = 0;
  Eigen::Index hi = inst.rows();
  while (lo < hi) {
    const Eigen::Index mid = lo + (hi - lo) / 2;
    const int cmp = compare_image_row(inst, gamma, i, mid);
    if (cmp == 0) return mid;
    if (cmp < 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return -1;
}

GroupSpec::GroupSpec(int degree, std::vector<SignedPermutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw Error(ErrorCode::kDimensionMismatch, "group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw Error(ErrorCode::kDimensionMismatch, "generator degree");
  }
}

std::vector<QVector> fixed_space(const GroupSpec& group) {
  const int n = group.degree();
  const auto t = static_cast<Eigen::Index>(group.generators().size());
  QMatrix stacked(t * n, n);
  for (Eigen::Index g = 0; g < t; ++g) {
    stacked.middleRows(g * n, n) =
        group.generators()[static_cast<std::size_t>(g)].matrix() - QMatrix::Identity(n, n);
  }
  return kernel_basis(stacked);
}

QMatrix fixing_equations(const GroupSpec& group) {
  const int n = group.degree();
  const std::vector<QVector> fix = fixed_space(group);
  const QMatrix basis = rows_to_matrix(fix, n);
  return rows_to_matrix(kernel_basis(basis), n);
}

namespace {

struct VectorLess {
  bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};

}  // namespace

std::vector<QVector> vector_orbit(const GroupSpec& group, const QVector& x) {
  if (x.size() != group.degree()) throw Error(ErrorCode::kDimensionMismatch, "vector_orbit");
  std::set<QVector, VectorLess> seen{x};
  std::deque<QVector> queue{x};
  while (!queue.empty()) {
    QVector y = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators()) {
      QVector z = apply(g, y);
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }
  return {seen.begin(), seen.end()};
}

QVector project_barycenter(const GroupSpec& group, const QVector& x) {
  const std::vector<QVector> orbit = vector_orbit(group, x);
  QVector sum = QVector::Constant(x.size(), Rational(0));
  for (const QVector& y : orbit) sum += y;
  const Rational size(static_cast<long long>(orbit.size()));
  for (Eigen::Index i = 0; i < sum.size(); ++i) sum(i) /= size;
  return sum;
}

namespace {

// Signed index s = +-(i+1) mapped to slot 2i (positive) or 2i+1 (negative).
std::size_t slot(int s) { return static_cast<std::size_t>(2 * ((s < 0 ? -s : s) - 1) + (s < 0)); }
int unslot(std::size_t k) {
  const int i = static_cast<int>(k / 2) + 1;
  return k % 2 ? -i : i;
}

int image_of(const SignedPermutation& g, int s) {
  const int j = (s < 0 ? -s : s) - 1;
  const int t = g.target(j) + 1;
  return (s < 0 ? -1 : 1) * g.sign(j) * t;
}

}  // namespace

std::vector<BasisOrbit> basis_orbits(const GroupSpec& group) {
  const int n = group.degree();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  std::vector<BasisOrbit> out;
  for (std::size_t start = 0; start < seen.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members{start};
    seen[start] = true;
    for (std::size_t q = 0; q < members.size(); ++q) {
      const int s = unslot(members[q]);
      for (const auto& g : group.generators()) {
        const std::size_t k = slot(image_of(g, s));
        if (!seen[k]) {
          seen[k] = true;
          members.push_back(k);
        }
      }
    }
    std::sort(members.begin(), members.end());
    BasisOrbit orbit;
    for (std::size_t k : members) orbit.members.push_back(unslot(k));
    for (std::size_t q = 0; q + 1 < members.size(); ++q) {
      if (members[q] % 2 == 0 && members[q + 1] == members[q] + 1) orbit.bipolar = true;
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

QVector orbit_barycenter(const BasisOrbit& orbit, int n) {
  QVector v = QVector::Constant(n, Rational(0));
  for (int s : orbit.members) {
    const int j = (s < 0 ? -s : s) - 1;
    v(j) += Rational(s < 0 ? -1 : 1);
  }
  const Rational size(static_cast<long long>(orbit.members.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= size;
  return v;
}

std::optional<Conjugation> conjugate_to_permutations(const GroupSpec& group) {
  const int n = group.degree();
  const std::vector<BasisOrbit> orbits = basis_orbits(group);
  if (orbits.size() != 2) return std::nullopt;
  for (const auto& o : orbits) {
    if (o.bipolar || static_cast<int>(o.members.size()) != n) return std::nullopt;
  }
  // orbits[0] contains e_1; epsilon sends it onto {e_1, ..., e_n}.
  std::vector<int> eps(static_cast<std::size_t>(n));
  for (int s : orbits[0].members) {
    const int j = (s < 0 ? -s : s) - 1;
    eps[static_cast<std::size_t>(j)] = s;
  }
  SignedPermutation epsilon(eps);
  const SignedPermutation inv = epsilon.inverse();
  std::vector<SignedPermutation> conj;
  for (const auto& g : group.generators()) conj.push_back(epsilon * g * inv);
  return Conjugation{std::move(epsilon), GroupSpec(n, std::move(conj))};
}

std::vector<SignedPermutation> group_elements(const GroupSpec& group, std::size_t limit) {
  const SignedPermutation id = SignedPermutation::identity(group.degree());
  std::set<SignedPermutation> seen{id};
  std::deque<SignedPermutation> queue{id};
  while (!queue.empty()) {
    SignedPermutation h = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators()) {
      SignedPermutation k = g * h;
      if (seen.insert(k).second) {
        if (seen.size() > limit) {
          throw Error(ErrorCode::kSearchBudgetExceeded, "group has more than " +
                                                            std::to_string(limit) + " elements");
        }
        queue.push_back(std::move(k));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<SignedPermutation> brute_force_symmetries(const ILPInstance& inst) {
  const int n = static_cast<int>(inst.cols());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> image(perm);
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) image[static_cast<std::size_t>(j)] = -image[static_cast<std::size_t>(j)];
      }
      SignedPermutation g(std::move(image));
      if (is_symmetry(inst, g)) out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

const char* level_name(SymmetryLevel level) {
  switch (level) {
    case SymmetryLevel::kFullSymmetric: return "full_symmetric";
    case SymmetryLevel::kAlternating: return "alternating";
    case SymmetryLevel::kTransitiveOnly: return "transitive_only";
    case SymmetryLevel::kNone: return "none";
  }
  return "?";
}

namespace {

bool coordinates_transitive(const std::vector<SignedPermutation>& gens, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      const auto t = static_cast<std::size_t>(g.target(queue[q]));
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(static_cast<int>(t));
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

constexpr int kBruteForceDegree = 6;

}  // namespace

SymmetryLevel verify_symmetric_group_invariance(const ILPInstance& inst) {
  const int n = static_cast<int>(inst.cols());
  if (n == 1) return SymmetryLevel::kFullSymmetric;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  const SignedPermutation long_cycle = SignedPermutation::cycle(n, all);
  if (is_symmetry(inst, SignedPermutation::cycle(n, {0, 1})) && is_symmetry(inst, long_cycle)) {
    return SymmetryLevel::kFullSymmetric;
  }
  // Alt(n) is (n-2)-transitive; below n = 5 that is weaker than needed, and
  // such groups are classified by the transitivity test instead.
  if (n >= 5 && is_symmetry(inst, SignedPermutation::cycle(n, {0, 1, 2}))) {
    const SignedPermutation second =
        n % 2 ? long_cycle
              : SignedPermutation::cycle(n, std::vector<int>(all.begin() + 1, all.end()));
    if (is_symmetry(inst, second)) return SymmetryLevel::kAlternating;
  }
  std::vector<SignedPermutation> gens;
  try {
    gens = detect_symmetries(inst, GraphMode::kFull).group.generators();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSearchBudgetExceeded || n > kBruteForceDegree) {
      if (e.code() == ErrorCode::kSearchBudgetExceeded) return SymmetryLevel::kNone;
      throw;
    }
    gens = brute_force_symmetries(inst);
  }
  return coordinates_transitive(gens, n) ? SymmetryLevel::kTransitiveOnly : SymmetryLevel::kNone;
}

bool certifies_transitivity(SymmetryLevel level, int n) {
  if (level == SymmetryLevel::kFullSymmetric) return true;
  return level == SymmetryLevel::kAlternating && n >= 5;
}

GroupSpec read_generators(std::istream& in, int degree) {
  std::vector<SignedPermutation> gens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<int> image;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t pos = 0;
        image.push_back(std::stoi(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
      }
    }
    if (image.empty()) continue;
    if (static_cast<int>(image.size()) != degree) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(degree) + " entries");
    }
    try {
      gens.emplace_back(std::move(image));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": not a signed permutation");
    }
  }
  return GroupSpec(degree, std::move(gens));
}

GroupSpec read_generators_file(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return read_generators(in, degree);
}

void write_generators(std::ostream& out, const GroupSpec& group) {
  for (const auto& g : group.generators()) out << g.str() << "\n";
}

}  // namespace symilp
