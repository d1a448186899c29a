#include "doctest.h"
#include "rbss/rational.hpp"

#include <stdexcept>
#include <unordered_set>

using rbss::Rat;

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(6, 4).num() == 3);
  CHECK(Rat(6, 4).den() == 2);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers, fractions and exact decimals") {
  CHECK(Rat::parse("42") == Rat(42));
  CHECK(Rat::parse("-42") == Rat(-42));
  CHECK(Rat::parse("+7/3") == Rat(7, 3));
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(Rat::parse("2.75") == Rat(11, 4));
  CHECK(Rat::parse("-0.5") == Rat(-1, 2));
  CHECK(Rat::parse("  3/9 ") == Rat(1, 3));
  CHECK(Rat::parse("0.1") == Rat(1, 10));

  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("two"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1e3"), std::invalid_argument);
  CHECK(!Rat::try_parse("1/").has_value());
}

TEST_CASE("arithmetic is exact") {
  // 1/3 + 1/6 = 1/2, no rounding anywhere
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(Rat(-5, 7).abs() == Rat(5, 7));
  CHECK(-Rat(5, 7) == Rat(-5, 7));
  CHECK(Rat(3, 4).inv() == Rat(4, 3));
  CHECK_THROWS_AS(Rat(0).inv(), std::domain_error);
  CHECK(Rat(2, 3).pow(0) == Rat(1));
  CHECK(Rat(2, 3).pow(5) == Rat(32, 243));
  CHECK(Rat::pow10(3) == Rat(1000));
  CHECK(Rat::pow10(-2) == Rat(1, 100));
  CHECK(Rat::pow10(0) == Rat(1));
}

TEST_CASE("rounding helpers") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(7, 2).trunc() == 3);
  CHECK(Rat(-7, 2).trunc() == -3);
  CHECK(Rat(4).floor() == 4);
  CHECK(Rat(4).ceil() == 4);
}

TEST_CASE("as_long only for small integers") {
  CHECK(Rat(9).as_long() == 9);
  CHECK(Rat(-3).as_long() == -3);
  CHECK(!Rat(1, 2).as_long().has_value());
  Rat huge = Rat(1L << 62) * Rat(1L << 62);
  CHECK(!huge.as_long().has_value());
}

TEST_CASE("text round trips") {
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-3, 2).str() == "-3/2");
  CHECK(Rat(5).str() == "5");
  CHECK(Rat(0).str() == "0");
  CHECK(Rat::parse(Rat(-22, 7).str()) == Rat(-22, 7));
}

TEST_CASE("decimal truncates toward zero with fixed width") {
  CHECK(Rat(1, 3).decimal(4) == "0.3333");
  CHECK(Rat(-1, 3).decimal(4) == "-0.3333");
  CHECK(Rat(1, 2).decimal(3) == "0.500");
  CHECK(Rat(7).decimal(2) == "7.00");
  CHECK(Rat(7).decimal(0) == "7");
  CHECK(Rat(-1, 1000).decimal(2) == "0.00");  // truncation kills the sign with the value
  CHECK(Rat(2999, 1000).decimal(2) == "2.99");
  CHECK_THROWS_AS(Rat(1).decimal(-1), std::invalid_argument);
}

TEST_CASE("ordering and hashing agree with value") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(2, 4) <= Rat(1, 2));
  std::unordered_set<Rat> s;
  s.insert(Rat(1, 2));
  s.insert(Rat(2, 4));  // same value, same slot
  s.insert(Rat(1, 3));
  CHECK(s.size() == 2);
}
