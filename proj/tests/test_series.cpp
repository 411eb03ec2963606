#include <random>
#include <stdexcept>

#include "appell/series.hpp"
#include "doctest.h"

using namespace appell;

namespace {

const IndeterminateRegistry& reg() { return IndeterminateRegistry::standard(); }

MultiPoly C(const Rational& v) { return MultiPoly::constant(reg(), v); }
MultiPoly V(const char* n) { return MultiPoly::var(reg(), n); }

PowerSeries constants(std::initializer_list<Rational> cs) {
  std::vector<MultiPoly> v;
  for (const Rational& c : cs) v.push_back(C(c));
  return PowerSeries(std::move(v));
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, Rational head) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> xe(0, 2);
  PowerSeries f(reg(), order);
  f.set_coeff(0, C(head));
  for (std::size_t n = 1; n <= order; ++n) {
    MultiPoly p = C(rat(coeff(rng))) + MultiPoly::var(reg(), "x", xe(rng)) * rat(coeff(rng));
    f.set_coeff(n, p);
  }
  return f;
}

}  // namespace

TEST_CASE("coefficient access is bounds-checked") {
  PowerSeries f(reg(), 3);
  CHECK(f.order() == 3);
  CHECK(f.coeff(3).is_zero());
  CHECK_THROWS_AS(f.coeff(4), std::out_of_range);
  CHECK_THROWS_AS(egf_coefficient(f, 4), std::out_of_range);
  CHECK_THROWS_AS(PowerSeries(std::vector<MultiPoly>{}), std::invalid_argument);
}

TEST_CASE("series_mul truncates the Cauchy product") {
  PowerSeries a = constants({rat(1), rat(1), rat(1)});
  PowerSeries b = constants({rat(1), rat(-1), rat(0)});
  PowerSeries p = series_mul(a, b);
  CHECK(p.coeff(0).constant_value() == rat(1));
  CHECK(p.coeff(1).is_zero());
  CHECK(p.coeff(2).is_zero());
  CHECK_THROWS_AS(series_mul(a, PowerSeries(reg(), 5)), std::invalid_argument);
}

TEST_CASE("inverse of the Bernoulli denominator series") {
  // 1/F has ordinary coefficients 1/(j+1); the inverse starts
  // 1, -1/2, 1/12, 0, -1/720 (Bernoulli numbers over factorials).
  PowerSeries denom(reg(), 8);
  for (std::size_t j = 0; j <= 8; ++j) {
    Rational c = Rational(1) / rat_factorial(j + 1);
    denom.set_coeff(j, C(c));
  }
  PowerSeries f = series_inverse(denom);
  CHECK(f.coeff(0).constant_value() == rat(1));
  CHECK(f.coeff(1).constant_value() == rat(-1, 2));
  CHECK(f.coeff(2).constant_value() == rat(1, 12));
  CHECK(f.coeff(3).is_zero());
  CHECK(f.coeff(4).constant_value() == rat(-1, 720));
  PowerSeries unit = series_mul(denom, f);
  CHECK(unit.coeff(0).constant_value() == rat(1));
  for (std::size_t j = 1; j <= 8; ++j) CHECK(unit.coeff(j).is_zero());
}

TEST_CASE("f times inverse f is one, polynomial coefficients") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    PowerSeries f = random_series(rng, 16, rat(2));
    PowerSeries g = series_inverse(f);
    PowerSeries unit = series_mul(f, g);
    CHECK(unit.coeff(0).constant_value() == rat(1));
    for (std::size_t j = 1; j <= 16; ++j) CHECK(unit.coeff(j).is_zero());
  }
  CHECK_THROWS_AS(series_inverse(PowerSeries(reg(), 2)), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    PowerSeries f = random_series(rng, 10, rat(1));
    PowerSeries back = series_exp(series_log(f));
    for (std::size_t j = 0; j <= 10; ++j) CHECK(back.coeff(j) == f.coeff(j));
  }
  CHECK_THROWS_AS(series_log(constants({rat(2), rat(1)})), std::invalid_argument);
  CHECK_THROWS_AS(series_exp(constants({rat(1), rat(1)})), std::invalid_argument);
}

TEST_CASE("integer powers match repeated multiplication") {
  std::mt19937_64 rng(13);
  PowerSeries f = random_series(rng, 8, rat(1));
  PowerSeries acc(reg(), 8);
  acc.set_coeff(0, C(rat(1)));
  for (long m = 0; m <= 5; ++m) {
    PowerSeries p = series_pow_symbolic(f, C(rat(m)));
    for (std::size_t j = 0; j <= 8; ++j) CHECK(p.coeff(j) == acc.coeff(j));
    acc = series_mul(acc, f);
  }
}

TEST_CASE("symbolic power is additive in the exponent") {
  std::mt19937_64 rng(17);
  PowerSeries f = random_series(rng, 8, rat(1));
  MultiPoly a = V("alpha"), b = V("beta");
  PowerSeries fa = series_pow_symbolic(f, a);
  PowerSeries fb = series_pow_symbolic(f, b);
  PowerSeries prod = series_mul(fa, fb);
  PowerSeries direct = series_pow_symbolic(f, a + b);
  for (std::size_t j = 0; j <= 8; ++j) CHECK(prod.coeff(j) == direct.coeff(j));
}

TEST_CASE("(1+t)^alpha has binomial coefficients") {
  PowerSeries f(reg(), 4);
  f.set_coeff(0, C(rat(1)));
  f.set_coeff(1, C(rat(1)));
  PowerSeries p = series_pow_symbolic(f, V("alpha"));
  for (long n = 0; n <= 4; ++n)
    CHECK(p.coeff(static_cast<std::size_t>(n)) == binomial_symbolic(V("alpha"), n));
  CHECK(p.coeff(2).str() == "1/2*alpha^2 - 1/2*alpha");
}

TEST_CASE("egf_coefficient scales by the factorial") {
  PowerSeries f = constants({rat(1), rat(1, 2), rat(1, 6)});
  CHECK(egf_coefficient(f, 0).constant_value() == rat(1));
  CHECK(egf_coefficient(f, 1).constant_value() == rat(1, 2));
  CHECK(egf_coefficient(f, 2).constant_value() == rat(1, 3));
}
