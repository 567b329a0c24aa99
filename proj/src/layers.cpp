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

#include "symilp/layers.hpp"

#include <memory>
#include <stdexcept>

#include "symilp/errors.hpp"
#include "symilp/lp.hpp"
#include "symilp/symmetry.hpp"

namespace symilp {

CoprimeDirection coprime_direction(const QVector& c) {
  bool zero = true;
  for (Eigen::Index j = 0; j < c.size() && zero; ++j) zero = c(j).is_zero();
  if (zero) throw Error(ErrorCode::kZeroObjective, "objective vector is zero");
  CoprimeDirection dir;
  dir.direction = primitive(c);
  for (Eigen::Index j = 0; j < c.size(); ++j) add_product(dir.norm_sq, dir.direction(j), dir.direction(j));
  return dir;
}

mpz_class layer_number(const CoprimeDirection& dir, const QVector& x) {
  if (x.size() != dir.direction.size()) throw Error(ErrorCode::kDimensionMismatch, "layer_number");
  if (!all_integral(x)) throw std::invalid_argument("layer_number needs an integral point");
  return dot(dir.direction, x).numerator();
}

QVector layer_center(const Layer& layer) {
  const Rational scale = Rational(layer.k) / layer.dir.norm_sq;
  QVector center(layer.dir.direction.size());
  for (Eigen::Index j = 0; j < center.size(); ++j) center(j) = scale * layer.dir.direction(j);
  return center;
}

QVector layer_witness(const CoprimeDirection& dir, const mpz_class& k) {
  const Eigen::Index n = dir.direction.size();
  std::vector<mpz_class> w(static_cast<std::size_t>(n), 0);
  mpz_class g = dir.direction(0).numerator();
  w[0] = 1;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (g == 1) break;
    const mpz_class d = dir.direction(i).numerator();
    mpz_class next;
    mpz_class s;
    mpz_class t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    for (Eigen::Index j = 0; j < i; ++j) w[static_cast<std::size_t>(j)] *= s;
    w[static_cast<std::size_t>(i)] = t;
    g = next;
  }
  if (g == -1) {
    for (auto& v : w) v = -v;
  } else if (g != 1) {
    throw std::logic_error("direction is not coprime");
  }
  QVector x(n);
  for (Eigen::Index j = 0; j < n; ++j) x(j) = Rational(mpz_class(w[static_cast<std::size_t>(j)] * k));
  return x;
}

namespace {

class LayerEnumerator {
 public:
  LayerEnumerator(const ILPInstance& inst, const IntegerBox& box, const mpz_class& k,
                  ScanStats& stats)
      : inst_(inst), box_(box), stats_(stats), n_(inst.cols()) {
    suffix_lo_.assign(static_cast<std::size_t>(n_ + 1), 0);
    suffix_hi_.assign(static_cast<std::size_t>(n_ + 1), 0);
    for (Eigen::Index j = n_ - 1; j >= 0; --j) {
      const auto u = static_cast<std::size_t>(j);
      suffix_lo_[u] = suffix_lo_[u + 1] + box.lower[u];
      suffix_hi_[u] = suffix_hi_[u + 1] + box.upper[u];
    }
    target_ = k;
    slack_.assign(static_cast<std::size_t>(n_ + 1), inst.b());
    x_ = QVector::Constant(n_, Rational(0));
  }

  std::optional<QVector> run() {
    if (descend(0, mpz_class(0))) return x_;
    return std::nullopt;
  }

 private:
  bool descend(Eigen::Index j, const mpz_class& partial) {
    if (j == n_) {
      ++stats_.feasibility_checks;
      const QVector& s = slack_[static_cast<std::size_t>(n_)];
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i).sign() < 0) return false;
      }
      return true;
    }
    const auto u = static_cast<std::size_t>(j);
    const mpz_class rest = target_ - partial;
    // x_j must leave a remainder reachable by the coordinates after j.
    mpz_class lo = rest - suffix_hi_[u + 1];
    mpz_class hi = rest - suffix_lo_[u + 1];
    if (lo < box_.lower[u]) lo = box_.lower[u];
    if (hi > box_.upper[u]) hi = box_.upper[u];
    for (mpz_class v = lo; v <= hi; ++v) {
      const Rational rv(v);
      x_(j) = rv;
      QVector& next = slack_[u + 1];
      next = slack_[u];
      if (!rv.is_zero()) {
        for (Eigen::Index i = 0; i < next.size(); ++i) {
          const Rational& a = inst_.A()(i, j);
          if (!a.is_zero()) next(i) -= a * rv;
        }
      }
      if (descend(j + 1, partial + v)) return true;
    }
    return false;
  }

  const ILPInstance& inst_;
  const IntegerBox& box_;
  ScanStats& stats_;
  Eigen::Index n_;
  mpz_class target_;
  std::vector<mpz_class> suffix_lo_;
  std::vector<mpz_class> suffix_hi_;
  std::vector<QVector> slack_;
  QVector x_;
};

// Integer bounds of P(A, b) intersected with the 1-layer k, or an empty box.
IntegerBox slice_box(const ILPInstance& inst, const mpz_class& k) {
  const Eigen::Index m = inst.rows();
  const Eigen::Index n = inst.cols();
  QMatrix a(m + 2, n);
  QVector b(m + 2);
  a.topRows(m) = inst.A();
  b.head(m) = inst.b();
  a.row(m).setConstant(Rational(1));
  a.row(m + 1).setConstant(Rational(-1));
  b(m) = Rational(k);
  b(m + 1) = Rational(mpz_class(-k));
  IntegerBox box;
  for (Eigen::Index j = 0; j < n; ++j) {
    QVector e = QVector::Constant(n, Rational(0));
    e(j) = Rational(1);
    const LPOutcome up = solve_lp(a, b, e);
    if (up.status == LPStatus::kInfeasible) return IntegerBox::uniform(n, 0, -1);
    const LPOutcome down = solve_lp(a, b, -e);
    if (up.status == LPStatus::kUnbounded || down.status == LPStatus::kUnbounded) {
      throw Error(ErrorCode::kBoxTooLarge, "x" + std::to_string(j + 1) + " is unbounded on layer " +
                                               k.get_str());
    }
    const mpz_class hi = up.value->floor();
    const mpz_class lo = (-*down.value).ceil();
    if (!hi.fits_slong_p() || !lo.fits_slong_p()) {
      throw Error(ErrorCode::kBoxTooLarge, "bound of x" + std::to_string(j + 1) + " out of range");
    }
    box.lower.push_back(lo.get_si());
    box.upper.push_back(hi.get_si());
  }
  return box;
}

void check_cap(const IntegerBox& box, double cap) {
  if (box.volume() > cap) {
    throw Error(ErrorCode::kBoxTooLarge, "box holds " + std::to_string(box.volume()) +
                                             " points, cap is " + std::to_string(cap));
  }
}

}  // namespace

LayerOracle make_enumeration_oracle(double cap) {
  struct Cache {
    const ILPInstance* inst = nullptr;
    IntegerBox box;
    bool per_layer = false;
  };
  auto cache = std::make_shared<Cache>();
  return [cache, cap](const ILPInstance& inst, const mpz_class& k,
                      ScanStats& stats) -> std::optional<QVector> {
    if (cache->inst != &inst) {
      cache->inst = nullptr;
      cache->per_layer = false;
      try {
        cache->box = default_box(inst);
      } catch (const Error& e) {
        // P(A, b) itself may be unbounded while every layer slice is bounded.
        if (e.code() != ErrorCode::kBoxTooLarge) throw;
        cache->per_layer = true;
      }
      if (!cache->per_layer) check_cap(cache->box, cap);
      cache->inst = &inst;
    }
    if (cache->per_layer) {
      const IntegerBox box = slice_box(inst, k);
      check_cap(box, cap);
      if (box.volume() == 0.0) return std::nullopt;
      return LayerEnumerator(inst, box, k, stats).run();
    }
    if (cache->box.volume() == 0.0) return std::nullopt;
    return LayerEnumerator(inst, cache->box, k, stats).run();
  };
}

ILPOutcome solve_by_layers(const ILPInstance& inst, const LayerOracle& oracle,
                           const SolveOptions& options, ScanStats* stats) {
  if (!inst.objective_is_ones()) {
    throw Error(ErrorCode::kObjectiveNotOnes, "the layer scan needs objective 1");
  }
  if (!options.assume_transitivity &&
      verify_symmetric_group_invariance(inst) == SymmetryLevel::kNone) {
    throw Error(ErrorCode::kTransitivityNotEstablished,
                "no transitive symmetry group found; pass --assume-transitivity to override");
  }
  const LineOutcome line = solve_lp_on_line(inst);
  if (line.status == LPStatus::kUnbounded) {
    throw Error(ErrorCode::kUnboundedRelaxation, "LP relaxation is unbounded");
  }
  ILPOutcome out;
  if (line.status == LPStatus::kInfeasible) return out;
  ScanStats local;
  ScanStats& st = stats ? *stats : local;
  const mpz_class n = static_cast<long>(inst.cols());
  const mpz_class hi = (Rational(n) * *line.zeta).floor();
  const mpz_class lo = n * line.zeta->floor();
  for (mpz_class k = hi; k >= lo; --k) {
    ++st.layers_scanned;
    if (auto x = oracle(inst, k, st)) {
      if (!is_feasible(inst, *x)) throw std::logic_error("layer oracle returned an infeasible point");
      out.status = ILPStatus::kOptimal;
      out.value = dot(inst.c(), *x);
      out.point = std::move(x);
      return out;
    }
  }
  return out;
}

}  // namespace symilp
