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

#include "symilp/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "symilp/errors.hpp"

namespace symilp {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

using u128 = unsigned __int128;

bool fits(__int128 v) { return v > kMin && v <= kMax; }

u128 gcd128(u128 a, u128 b) {
  constexpr u128 kWord = std::numeric_limits<std::uint64_t>::max();
  while (b != 0) {
    if (a <= kWord && b <= kWord) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_int128(__int128 v) {
  u128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return v < 0 ? mpz_class(-out) : out;
}

// long is 64 bits on every platform this library targets.
static_assert(sizeof(long) == 8, "symilp assumes LP64");

}  // namespace

Rational::Rational(long long value) : num_(value), den_(1) {
  if (value == kMin) {
    den_ = 0;
    big_ = new mpq_class(mpz_from_int128(value));
  }
}

Rational::Rational(long long num, long long den) : num_(0), den_(1) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  __int128 n = num;
  __int128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  assign_reduced(n, d);
}

Rational::Rational(const mpz_class& value) : num_(0), den_(1) { assign(mpq_class(value)); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : num_(0), den_(1) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(q);
}

Rational::Rational(const mpq_class& value) : num_(0), den_(1) { assign(value); }

Rational::Rational(const Rational& other) : den_(other.den_) {
  if (other.is_big()) {
    big_ = new mpq_class(*other.big_);
  } else {
    num_ = other.num_;
  }
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  if (other.is_big()) {
    if (is_big()) {
      *big_ = *other.big_;
    } else {
      big_ = new mpq_class(*other.big_);
      den_ = 0;
    }
  } else {
    release();
    num_ = other.num_;
    den_ = other.den_;
  }
  return *this;
}

void Rational::release() noexcept {
  if (is_big()) {
    delete big_;
    den_ = 1;
    num_ = 0;
  }
}

void Rational::assign(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != kMin) {
    std::int64_t nn = n.get_si();
    std::int64_t dd = d.get_si();
    release();
    num_ = nn;
    den_ = dd;
    return;
  }
  if (is_big()) {
    *big_ = value;
  } else {
    big_ = new mpq_class(value);
    den_ = 0;
  }
}

void Rational::assign_reduced(__int128 num, __int128 den) {
  if (fits(num) && fits(den)) {
    release();
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return;
  }
  mpq_class q(mpz_from_int128(num), mpz_from_int128(den));
  assign(q);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  };
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw fail();

  auto parse_int = [&](std::string_view digits, mpz_class& out) {
    std::string buf(digits);
    if (!buf.empty() && buf[0] == '+') buf.erase(0, 1);
    std::size_t start = (!buf.empty() && buf[0] == '-') ? 1 : 0;
    if (buf.size() == start) throw fail();
    for (std::size_t i = start; i < buf.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(buf[i]))) throw fail();
    }
    if (out.set_str(buf, 10) != 0) throw fail();
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num;
    mpz_class den;
    parse_int(s.substr(0, slash), num);
    std::string_view ds = s.substr(slash + 1);
    if (!ds.empty() && (ds[0] == '-' || ds[0] == '+')) throw fail();
    parse_int(ds, den);
    if (den == 0) throw fail();
    return Rational(num, den);
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits.push_back(s[i++]);
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i++]);
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw fail();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::string exp_text(s.substr(i));
    if (exp_text.empty()) throw fail();
    std::size_t pos = 0;
    long parsed = 0;
    try {
      parsed = std::stol(exp_text, &pos);
    } catch (const std::exception&) {
      throw fail();
    }
    if (pos != exp_text.size() || parsed > 1000000 || parsed < -1000000) throw fail();
    exponent += parsed;
    i = s.size();
  }
  if (i != s.size()) throw fail();

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(mpz_class(mantissa * scale));
  return Rational(mantissa, scale);
}

std::string Rational::str() const {
  if (is_big()) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (is_big()) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  if (is_big()) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (is_big()) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const {
  if (is_big()) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (den_ != 1) return std::nullopt;
  return num_;
}

int Rational::sign() const {
  if (is_big()) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::floor() const {
  if (is_big()) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return out;
  }
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return mpz_class(static_cast<long>(q));
}

mpz_class Rational::ceil() const {
  if (is_big()) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return out;
  }
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return mpz_class(static_cast<long>(q));
}

Rational Rational::operator-() const {
  if (is_big()) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    if (den_ == 1 && rhs.den_ == 1) {
      long long r;
      if (!__builtin_add_overflow(num_, rhs.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
      assign_reduced(static_cast<__int128>(num_) + rhs.num_, 1);
      return *this;
    }
    __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
    assign_reduced(n, d);
    return *this;
  }
  mpq_class r = to_mpq();
  r += rhs.to_mpq();
  assign(r);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!rhs.is_big()) {
    Rational neg;
    neg.num_ = -rhs.num_;
    neg.den_ = rhs.den_;
    return *this += neg;
  }
  mpq_class r = to_mpq();
  r -= rhs.to_mpq();
  assign(r);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    if (den_ == 1 && rhs.den_ == 1) {
      long long r;
      if (!__builtin_mul_overflow(num_, rhs.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
      assign_reduced(static_cast<__int128>(num_) * rhs.num_, 1);
      return *this;
    }
    std::uint64_t g1 = std::gcd(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_),
                                static_cast<std::uint64_t>(rhs.den_));
    std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(rhs.num_ < 0 ? -rhs.num_ : rhs.num_),
                                static_cast<std::uint64_t>(den_));
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    __int128 n = static_cast<__int128>(num_ / static_cast<std::int64_t>(g1)) *
                 (rhs.num_ / static_cast<std::int64_t>(g2));
    __int128 d = static_cast<__int128>(den_ / static_cast<std::int64_t>(g2)) *
                 (rhs.den_ / static_cast<std::int64_t>(g1));
    if (n == 0) d = 1;
    assign_reduced(n, d);
    return *this;
  }
  mpq_class r = to_mpq();
  r *= rhs.to_mpq();
  assign(r);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!rhs.is_big()) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  mpq_class r = to_mpq();
  r /= rhs.to_mpq();
  assign(r);
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.is_big() && !rhs.is_big()) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.is_big() != rhs.is_big()) return false;
  return *lhs.big_ == *rhs.big_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.is_big() && !rhs.is_big()) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    return l <=> r;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

void add_product(Rational& acc, const Rational& lhs, const Rational& rhs) {
  if (!acc.is_big() && !lhs.is_big() && !rhs.is_big() && acc.den_ == 1 && lhs.den_ == 1 &&
      rhs.den_ == 1) {
    long long p;
    long long s;
    if (!__builtin_mul_overflow(lhs.num_, rhs.num_, &p) &&
        !__builtin_add_overflow(acc.num_, p, &s) && s != kMin) {
      acc.num_ = s;
      return;
    }
  }
  if (lhs.is_zero() || rhs.is_zero()) return;
  acc += lhs * rhs;
}

std::size_t Rational::hash() const {
  if (!is_big()) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(big_->get_str(16));
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rational round_decimal(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational scaled = abs(value) * Rational(scale) + Rational(1, 2);
  mpz_class n = scaled.floor();
  if (value.sign() < 0) n = -n;
  return Rational(n, scale);
}

}  // namespace symilp
