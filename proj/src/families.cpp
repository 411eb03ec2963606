#include "appell/families.hpp"

#include <random>
#include <stdexcept>

namespace appell {

namespace {

// inverse of sum_{j} c_j t^j at the given truncation order, constants only
std::vector<Rational> invert_egf(const std::vector<Rational>& denom_egf, unsigned count) {
  const auto& reg = IndeterminateRegistry::standard();
  PowerSeries d(reg, count);
  for (unsigned j = 0; j <= count; ++j)
    d.set_coeff(j, MultiPoly::constant(reg, denom_egf[j] / rat_factorial(j)));
  PowerSeries inv = series_inverse(d);
  std::vector<Rational> out(count + 1);
  for (unsigned n = 0; n <= count; ++n) out[n] = egf_coefficient(inv, n).constant_value();
  return out;
}

}  // namespace

std::vector<Rational> bernoulli_moments(unsigned count) {
  // t/(e^t - 1) is the inverse of (e^t - 1)/t = sum_j t^j / (j+1)!,
  // an EGF with coefficients 1/(j+1)
  std::vector<Rational> denom(count + 1);
  for (unsigned j = 0; j <= count; ++j) denom[j] = rat(1, static_cast<long>(j) + 1);
  return invert_egf(denom, count);
}

std::vector<Rational> euler_moments(unsigned count) {
  // 2/(e^t + 1) is the inverse of (1 + e^t)/2: EGF coefficients 1, 1/2, 1/2, ...
  std::vector<Rational> denom(count + 1, rat(1, 2));
  denom[0] = 1;
  return invert_egf(denom, count);
}

std::vector<Rational> bernoulli_moments_oracle(unsigned count) {
  std::vector<Rational> b(count + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= count; ++n) {
    Rational s(0);
    for (unsigned k = 0; k < n; ++k) s += rat_binomial(n + 1, k) * b[k];
    b[n] = -s / rat_binomial(n + 1, n);
  }
  return b;
}

std::vector<Rational> euler_moments_oracle(unsigned count) {
  std::vector<Rational> a(count + 1);
  a[0] = 1;
  for (unsigned n = 1; n <= count; ++n) {
    Rational s(0);
    for (unsigned k = 0; k < n; ++k) s += rat_binomial(n, k) * a[k];
    a[n] = s * rat(-1, 2);
  }
  return a;
}

namespace {

Rational random_moment(unsigned long long seed, unsigned n) {
  if (n == 0) return Rational(1);
  constexpr long kBound = 10;
  std::mt19937_64 rng(seed ^ (static_cast<unsigned long long>(n) * 0x9E3779B97F4A7C15ull));
  std::uniform_int_distribution<long> num(-kBound, kBound);
  std::uniform_int_distribution<long> den(1, kBound);
  return rat(num(rng), den(rng));
}

}  // namespace

AppellFamily make_family(const std::string& selector) {
  if (selector == "bernoulli") {
    return AppellFamily(MomentSequence("bernoulli", [](unsigned n) {
      return bernoulli_moments(n)[n];
    }));
  }
  if (selector == "euler") {
    return AppellFamily(MomentSequence("euler", [](unsigned n) {
      return euler_moments(n)[n];
    }));
  }
  if (selector == "monomial") {
    return AppellFamily(MomentSequence("monomial", [](unsigned n) {
      return Rational(n == 0 ? 1 : 0);
    }));
  }
  if (selector == "exponential") {
    return AppellFamily(MomentSequence("exponential", [](unsigned) { return Rational(1); }));
  }
  if (selector.rfind("random:", 0) == 0) {
    std::string tail = selector.substr(7);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad random family seed: '" + tail + "'");
    unsigned long long seed = std::stoull(tail);
    return AppellFamily(MomentSequence(selector, [seed](unsigned n) {
      return random_moment(seed, n);
    }));
  }
  throw std::invalid_argument("unknown family: '" + selector + "'");
}

std::vector<std::string> catalog_names() {
  return {"bernoulli", "euler", "monomial", "exponential"};
}

std::pair<MultiPoly, MultiPoly> reflection_check(unsigned n) {
  AppellFamily bern = make_family("bernoulli");
  const auto& reg = bern.registry();
  MultiPoly x = MultiPoly::var(reg, "x");
  MultiPoly one = MultiPoly::constant(reg, Rational(1));
  MultiPoly lhs = substitute(bern.poly(n), "x", -x);
  MultiPoly rhs = substitute(bern.poly(n), "x", x + one) * Rational(n % 2 == 0 ? 1 : -1);
  return {lhs, rhs};
}

}  // namespace appell
