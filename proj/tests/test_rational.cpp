#include <stdexcept>

#include "appell/rational.hpp"
#include "doctest.h"

using namespace appell;

TEST_CASE("rat canonicalizes") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(-6, -4) == rat(3, 2));
  CHECK(rat(0, 7) == rat(0));
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rat_to_string") {
  CHECK(rat_to_string(rat(3)) == "3");
  CHECK(rat_to_string(rat(-1, 2)) == "-1/2");
  CHECK(rat_to_string(rat(0)) == "0");
  CHECK(rat_to_string(rat(10, 4)) == "5/2");
}

TEST_CASE("rat_from_string accepts p, -p, p/q") {
  CHECK(rat_from_string("5") == rat(5));
  CHECK(rat_from_string("-7/3") == rat(-7, 3));
  CHECK(rat_from_string("  4/6 ") == rat(2, 3));
  CHECK(rat_from_string("-0") == rat(0));
}

TEST_CASE("rat_from_string rejects malformed input") {
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("2/"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("/3"), std::invalid_argument);
}

TEST_CASE("rat_from_string round-trips rat_to_string") {
  for (long num = -12; num <= 12; ++num)
    for (long den = 1; den <= 9; ++den) {
      Rational r = rat(num, den);
      CHECK(rat_from_string(rat_to_string(r)) == r);
    }
}

TEST_CASE("rat_binomial") {
  CHECK(rat_binomial(0, 0) == rat(1));
  CHECK(rat_binomial(5, 2) == rat(10));
  CHECK(rat_binomial(7, 7) == rat(1));
  CHECK(rat_binomial(3, 5) == rat(0));
  Rational row = 0;
  for (unsigned k = 0; k <= 10; ++k) row += rat_binomial(10, k);
  CHECK(row == rat(1024));
  for (unsigned k = 1; k <= 8; ++k)
    CHECK(rat_binomial(8, k) == rat_binomial(7, k - 1) + rat_binomial(7, k));
}

TEST_CASE("rat_factorial") {
  CHECK(rat_factorial(0) == rat(1));
  CHECK(rat_factorial(1) == rat(1));
  CHECK(rat_factorial(5) == rat(120));
  CHECK(rat_factorial(12) == rat(479001600));
}

TEST_CASE("rat_falling") {
  CHECK(rat_falling(5, 0) == rat(1));
  CHECK(rat_falling(5, 2) == rat(20));
  CHECK(rat_falling(3, 5) == rat(0));
  CHECK(rat_falling(-2, 3) == rat(-24));
  for (unsigned p = 0; p <= 6; ++p)
    CHECK(rat_falling(6, p) == rat_binomial(6, p) * rat_factorial(p));
}
