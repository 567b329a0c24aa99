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

// Instance data model for max c^T x s.t. Ax <= b over R^n or Z^n.

#ifndef SYMILP_MODEL_HPP_
#define SYMILP_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symilp/linalg.hpp"

namespace symilp {

// A raw inequality a^T x <= b stored as the vector (a_1, ..., a_n, b).
using RawRow = QVector;

class ILPInstance;

// Scales every row of (A|b) to coprime integers, drops zero rows with a
// non-negative right-hand side, removes duplicates, and sorts rows
// lexicographically on (coefficients, rhs).
//
// Throws kInfeasibleZeroRow for 0 <= b with b < 0 and kEmptySystem when no
// row survives.
ILPInstance normalize(const std::vector<RawRow>& rows, const QVector& objective,
                      std::string name = {});

class ILPInstance {
 public:
  const QMatrix& A() const { return a_; }
  const QVector& b() const { return b_; }
  const QVector& c() const { return c_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }

  // Row i as (a_i | b_i).
  RawRow raw_row(Eigen::Index i) const;
  std::vector<RawRow> raw_rows() const;

  // True iff c is the all-ones vector.
  bool objective_is_ones() const;

 private:
  friend ILPInstance normalize(const std::vector<RawRow>&, const QVector&, std::string);
  ILPInstance() = default;

  QMatrix a_;
  QVector b_;
  QVector c_;
  std::string name_;
};

// Exact test of Ax <= b.
bool is_feasible(const ILPInstance& inst, const QVector& x);

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };
enum class ILPStatus { kOptimal, kInfeasible };

const char* status_name(LPStatus status);
const char* status_name(ILPStatus status);

struct LPOutcome {
  LPStatus status = LPStatus::kInfeasible;
  std::optional<QVector> point;
  std::optional<Rational> value;
};

struct ILPOutcome {
  ILPStatus status = ILPStatus::kInfeasible;
  std::optional<QVector> point;  // integral entries
  std::optional<Rational> value;
};

// Closed integer box lower_i <= x_i <= upper_i.
struct IntegerBox {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  std::size_t dim() const { return lower.size(); }
  // Number of lattice points; saturates at the maximum of double's exact range.
  double volume() const;
  static IntegerBox uniform(std::size_t n, std::int64_t lo, std::int64_t hi);
};

inline constexpr double kDefaultBoxCap = 1e8;

// Exhaustive search over the integer points of `box`. Ties go to the
// lexicographically smallest optimal point. Throws kBoxTooLarge above `cap`.
ILPOutcome brute_force_ilp(const ILPInstance& inst, const IntegerBox& box,
                           double cap = kDefaultBoxCap);

// True iff every entry is an integer.
bool all_integral(const QVector& x);

}  // namespace symilp

#endif  // SYMILP_MODEL_HPP_
