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

#include <limits>
#include <random>
#include <unordered_set>

#include "gtest/gtest.h"
#include "symilp/errors.hpp"

namespace symilp {
namespace {

TEST(RationalTest, LowestTermsAndSign) {
  const Rational q(-4, 6);
  EXPECT_EQ(q.str(), "-2/3");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational(0, -5).str(), "0");
  EXPECT_TRUE(Rational(0, 7) == Rational(0));
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, ParseForms) {
  EXPECT_EQ(Rational::parse("9.333"), Rational(9333, 1000));
  EXPECT_EQ(Rational::parse("-0.917"), Rational(-917, 1000));
  EXPECT_EQ(Rational::parse("12/8"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
  EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(),
            "123456789012345678901234567890");
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "1/-2", "0x10", "1 2"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(RationalTest, OverflowPromotesAndDemotes) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class("85070591730234615847396907784232501249")));
  EXPECT_FALSE(sq.to_int64().has_value());
  const Rational back = sq / big;
  EXPECT_EQ(back, big);
  EXPECT_EQ(back.to_int64(), std::numeric_limits<std::int64_t>::max());
  EXPECT_EQ(back.hash(), big.hash());
  const Rational min_value(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(min_value.str(), "-9223372036854775808");
  EXPECT_EQ((-min_value).str(), "9223372036854775808");
}

TEST(RationalTest, ArithmeticMatchesGmp) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int t = 0; t < 2000; ++t) {
    std::int64_t d1 = dist(rng);
    std::int64_t d2 = dist(rng);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = 3;
    const Rational a(dist(rng), d1);
    const Rational b(dist(rng), d2);
    const mpq_class qa = a.to_mpq();
    const mpq_class qb = b.to_mpq();
    EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (!b.is_zero()) EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
    EXPECT_EQ(a == b, qa == qb);
    Rational acc = a;
    add_product(acc, a, b);
    EXPECT_EQ(acc.to_mpq(), mpq_class(qa + qa * qb));
  }
}

TEST(RationalTest, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(5).floor(), 5);
  EXPECT_EQ(Rational(5).ceil(), 5);
}

TEST(RationalTest, RoundDecimalHalfAwayFromZero) {
  EXPECT_EQ(round_decimal(Rational(56, 6), 3), Rational(9333, 1000));
  EXPECT_EQ(round_decimal(Rational(-11, 12), 3), Rational(-917, 1000));
  EXPECT_EQ(round_decimal(Rational(1, 2000), 3), Rational(1, 1000));
  EXPECT_EQ(round_decimal(Rational(-1, 2000), 3), Rational(-1, 1000));
  EXPECT_EQ(round_decimal(Rational(73, 10), 3), Rational(73, 10));
}

TEST(RationalTest, HashConsistentWithEquality) {
  std::unordered_set<Rational> set;
  set.insert(Rational(2, 4));
  set.insert(Rational(1, 2));
  set.insert(Rational::parse("0.5"));
  EXPECT_EQ(set.size(), 1u);
}

}  // namespace
}  // namespace symilp
