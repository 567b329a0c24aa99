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

#include "symilp/model.hpp"

#include <algorithm>
#include <limits>

#include "symilp/errors.hpp"

namespace symilp {

ILPInstance normalize(const std::vector<RawRow>& rows, const QVector& objective,
                      std::string name) {
  const Eigen::Index n = objective.size();
  if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "objective must have at least one entry");
  std::vector<QVector> kept;
  kept.reserve(rows.size());
  for (const RawRow& row : rows) {
    if (row.size() != n + 1) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row has " + std::to_string(row.size()) + " entries, expected " +
                      std::to_string(n + 1));
    }
    bool zero = true;
    for (Eigen::Index j = 0; j < n && zero; ++j) zero = row(j).is_zero();
    if (zero) {
      if (row(n).sign() < 0) {
        throw Error(ErrorCode::kInfeasibleZeroRow, "0 <= " + row(n).str() + " cannot hold");
      }
      continue;
    }
    kept.push_back(primitive(row));
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const QVector& a, const QVector& b) { return a == b; }),
             kept.end());
  if (kept.empty()) throw Error(ErrorCode::kEmptySystem, "no non-trivial inequality left");

  ILPInstance inst;
  const auto m = static_cast<Eigen::Index>(kept.size());
  inst.a_.resize(m, n);
  inst.b_.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    QVector& row = kept[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) inst.a_(i, j) = std::move(row(j));
    inst.b_(i) = std::move(row(n));
    row = QVector();
  }
  inst.c_ = objective;
  inst.name_ = std::move(name);
  return inst;
}

RawRow ILPInstance::raw_row(Eigen::Index i) const {
  RawRow row(cols() + 1);
  row.head(cols()) = a_.row(i).transpose();
  row(cols()) = b_(i);
  return row;
}

std::vector<RawRow> ILPInstance::raw_rows() const {
  std::vector<RawRow> out;
  out.reserve(static_cast<std::size_t>(rows()));
  for (Eigen::Index i = 0; i < rows(); ++i) out.push_back(raw_row(i));
  return out;
}

bool ILPInstance::objective_is_ones() const {
  for (Eigen::Index j = 0; j < c_.size(); ++j) {
    if (!(c_(j) == Rational(1))) return false;
  }
  return true;
}

bool is_feasible(const ILPInstance& inst, const QVector& x) {
  if (x.size() != inst.cols()) throw Error(ErrorCode::kDimensionMismatch, "is_feasible");
  for (Eigen::Index i = 0; i < inst.rows(); ++i) {
    if (dot(inst.A().row(i), x) > inst.b()(i)) return false;
  }
  return true;
}

const char* status_name(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

const char* status_name(ILPStatus status) {
  return status == ILPStatus::kOptimal ? "optimal" : "infeasible";
}

double IntegerBox::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0.0;
    v *= static_cast<double>(upper[i] - lower[i]) + 1.0;
  }
  return v;
}

IntegerBox IntegerBox::uniform(std::size_t n, std::int64_t lo, std::int64_t hi) {
  return IntegerBox{std::vector<std::int64_t>(n, lo), std::vector<std::int64_t>(n, hi)};
}

ILPOutcome brute_force_ilp(const ILPInstance& inst, const IntegerBox& box, double cap) {
  const Eigen::Index n = inst.cols();
  const Eigen::Index m = inst.rows();
  if (box.dim() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kDimensionMismatch, "box dimension differs from instance");
  }
  const double volume = box.volume();
  if (volume > cap) {
    throw Error(ErrorCode::kBoxTooLarge,
                "box holds " + std::to_string(volume) + " points, cap is " + std::to_string(cap));
  }
  ILPOutcome best;
  if (volume == 0.0) return best;

  QVector x(n);
  for (Eigen::Index j = 0; j < n; ++j) x(j) = Rational(box.lower[static_cast<std::size_t>(j)]);
  // slack = b - A x, updated column-wise as the odometer advances.
  QVector slack = inst.b() - multiply(inst.A(), x);
  Rational best_value;
  while (true) {
    bool feasible = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (slack(i).sign() < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      Rational value = dot(inst.c(), x);
      if (!best.point || value > best_value) {
        best_value = value;
        best.point = x;
      }
    }
    Eigen::Index j = n - 1;
    while (j >= 0) {
      const auto ju = static_cast<std::size_t>(j);
      if (*x(j).to_int64() < box.upper[ju]) break;
      const Rational span(box.upper[ju] - box.lower[ju]);
      for (Eigen::Index i = 0; i < m; ++i) {
        if (!inst.A()(i, j).is_zero()) add_product(slack(i), inst.A()(i, j), span);
      }
      x(j) = Rational(box.lower[ju]);
      --j;
    }
    if (j < 0) break;
    x(j) += Rational(1);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!inst.A()(i, j).is_zero()) slack(i) -= inst.A()(i, j);
    }
  }
  if (best.point) {
    best.status = ILPStatus::kOptimal;
    best.value = best_value;
  }
  return best;
}

bool all_integral(const QVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_integer()) return false;
  }
  return true;
}

}  // namespace symilp
