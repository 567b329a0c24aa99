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

#include "symilp/corepoint.hpp"

#include <algorithm>
#include <stdexcept>

#include "symilp/errors.hpp"
#include "symilp/lp.hpp"
#include "symilp/symmetry.hpp"

namespace symilp {
namespace {

// k = q n + r with 0 <= r < n.
void split_layer(int n, const mpz_class& k, mpz_class& q, long& r) {
  if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "dimension must be positive");
  const mpz_class nn = n;
  mpz_fdiv_q(q.get_mpz_t(), k.get_mpz_t(), nn.get_mpz_t());
  r = mpz_class(k - q * nn).get_si();
}

}  // namespace

std::vector<QVector> core_points(int n, const mpz_class& k) {
  mpz_class q;
  long r = 0;
  split_layer(n, k, q, r);
  const Rational low(q);
  const Rational high(mpz_class(q + 1));
  std::vector<bool> raised(static_cast<std::size_t>(n), false);
  std::fill(raised.begin(), raised.begin() + r, true);
  std::vector<QVector> out;
  do {
    QVector x(n);
    for (int j = 0; j < n; ++j) x(j) = raised[static_cast<std::size_t>(j)] ? high : low;
    out.push_back(std::move(x));
  } while (std::prev_permutation(raised.begin(), raised.end()));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

QVector core_representative(int n, const mpz_class& k) {
  mpz_class q;
  long r = 0;
  split_layer(n, k, q, r);
  QVector x = QVector::Constant(n, Rational(q));
  for (long i = 0; i < r; ++i) x(i) = Rational(mpz_class(q + 1));
  return x;
}

bool core_distance_check(int n, const mpz_class& k, const QVector& x) {
  if (x.size() != n) throw Error(ErrorCode::kDimensionMismatch, "core_distance_check");
  Rational sum;
  for (Eigen::Index j = 0; j < x.size(); ++j) sum += x(j);
  if (!(sum == Rational(k))) throw std::invalid_argument("point is not on layer k");
  mpz_class q;
  long r = 0;
  split_layer(n, k, q, r);
  const Rational center = Rational(k) / Rational(n);
  Rational dist;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Rational diff = x(j) - center;
    add_product(dist, diff, diff);
  }
  // Core points sit at squared distance r (n - r) / n.
  return dist == Rational(r * (n - r), n);
}

ILPOutcome solve_core_point(const ILPInstance& inst, const SolveOptions& options,
                            ScanStats* stats) {
  if (!inst.objective_is_ones()) {
    throw Error(ErrorCode::kObjectiveNotOnes, "the core point algorithm needs objective 1");
  }
  const int n = static_cast<int>(inst.cols());
  if (!options.assume_transitivity) {
    const SymmetryLevel level = verify_symmetric_group_invariance(inst);
    if (!certifies_transitivity(level, n)) {
      throw Error(ErrorCode::kTransitivityNotEstablished,
                  std::string("symmetry level '") + level_name(level) +
                      "' does not certify the transitivity hypothesis; pass "
                      "--assume-transitivity to override");
    }
  }
  const LineOutcome line = solve_lp_on_line(inst);
  if (line.status == LPStatus::kUnbounded) {
    throw Error(ErrorCode::kUnboundedRelaxation, "LP relaxation is unbounded");
  }
  return core_point_scan(inst, line, stats);
}

ILPOutcome core_point_scan(const ILPInstance& inst, const LineOutcome& line, ScanStats* stats) {
  ILPOutcome out;
  if (line.status != LPStatus::kOptimal) return out;
  const int n = static_cast<int>(inst.cols());
  ScanStats local;
  ScanStats& st = stats ? *stats : local;
  const mpz_class q = line.zeta->floor();
  const mpz_class top = (Rational(n) * *line.zeta).floor();
  long d = mpz_class(top - q * n).get_si();
  const Rational low(q);
  const Rational high(mpz_class(q + 1));

  // One buffer for the representative and its slack b - Ax; lowering the
  // raised coordinate d-1 by one adds column d-1 of A to the slack.
  QVector x = QVector::Constant(n, low);
  for (long i = 0; i < d; ++i) x(i) = high;
  QVector slack = inst.b() - multiply(inst.A(), x);
  const QMatrix& a = inst.A();
  const Eigen::Index m = inst.rows();
  while (true) {
    ++st.layers_scanned;
    ++st.feasibility_checks;
    bool feasible = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (slack(i).sign() < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      out.status = ILPStatus::kOptimal;
      out.value = Rational(mpz_class(q * n + d));
      out.point = std::move(x);
      return out;
    }
    if (d == 0) break;
    --d;
    x(d) = low;
    for (Eigen::Index i = 0; i < m; ++i) {
      const Rational& v = a(i, d);
      if (!v.is_zero()) slack(i) += v;
    }
  }
  return out;
}

LayerOracle make_core_point_oracle() {
  return [](const ILPInstance& inst, const mpz_class& k, ScanStats& stats) -> std::optional<QVector> {
    ++stats.feasibility_checks;
    QVector x = core_representative(static_cast<int>(inst.cols()), k);
    if (is_feasible(inst, x)) return x;
    return std::nullopt;
  };
}

}  // namespace symilp
