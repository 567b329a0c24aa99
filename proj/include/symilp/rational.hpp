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

#ifndef SYMILP_RATIONAL_HPP_
#define SYMILP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace symilp {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit into a signed 64-bit word
// (excluding INT64_MIN) are stored inline; everything else lives in a heap
// allocated mpq_class. The representation is canonical: a value is stored
// inline whenever it fits, so two equal values always share a representation.
// sizeof(Rational) == 16, which matters for the multi-million entry matrices
// produced by the instance generators.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(int value) noexcept : num_(value), den_(1) {}  // NOLINT
  Rational(long value) : Rational(static_cast<long long>(value)) {}  // NOLINT
  Rational(long long value);  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpz_class& value);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept : den_(other.den_) {
    if (other.is_big()) {
      big_ = other.big_;
      other.den_ = 1;
      other.num_ = 0;
    } else {
      num_ = other.num_;
    }
  }
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept {
    if (this != &other) {
      release();
      den_ = other.den_;
      if (other.is_big()) {
        big_ = other.big_;
        other.den_ = 1;
        other.num_ = 0;
      } else {
        num_ = other.num_;
      }
    }
    return *this;
  }
  ~Rational() { release(); }

  // Accepts "p/q", "p", and finite decimals such as "-9.333" or "1e-3".
  // Throws symilp::Error(ErrorCode::kParse) on malformed input.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;
  // Integral values that fit into int64; empty otherwise.
  std::optional<std::int64_t> to_int64() const;

  bool is_zero() const { return !is_big() && num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const;

  mpz_class floor() const;
  mpz_class ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  // acc += lhs * rhs without a temporary on the inline path.
  friend void add_product(Rational& acc, const Rational& lhs, const Rational& rhs);

  std::size_t hash() const;

 private:
  bool is_big() const { return den_ == 0; }
  void release() noexcept;
  void assign(const mpq_class& value);
  // Stores the reduced fraction num/den (den > 0) given as 128-bit words.
  void assign_reduced(__int128 num, __int128 den);

  // den_ == 0 marks the heap representation.
  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;
};

Rational abs(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

// Integer helpers used throughout the library.
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

// Round half away from zero to the given number of decimal places.
Rational round_decimal(const Rational& value, int places);

}  // namespace symilp

template <>
struct std::hash<symilp::Rational> {
  std::size_t operator()(const symilp::Rational& value) const { return value.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<symilp::Rational> : GenericNumTraits<symilp::Rational> {
  typedef symilp::Rational Real;
  typedef symilp::Rational NonInteger;
  typedef symilp::Rational Nested;
  typedef symilp::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
};

}  // namespace Eigen

#endif  // SYMILP_RATIONAL_HPP_
