#pragma once

#include <string>
#include <utility>
#include <vector>

#include "appell/family.hpp"

namespace appell {

// Moments via series inversion: a_n = n! [t^n] 1/F_inv(t) where the
// Bernoulli EGF is the inverse of sum t^j/(j+1)! and the Euler EGF is the
// inverse of (1 + e^t)/2.
std::vector<Rational> bernoulli_moments(unsigned count);
std::vector<Rational> euler_moments(unsigned count);

// Independent recurrence oracles:
//   sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1;
//   a_n = -1/2 sum_{k=0}^{n-1} C(n,k) a_k for n >= 1 (Euler).
std::vector<Rational> bernoulli_moments_oracle(unsigned count);
std::vector<Rational> euler_moments_oracle(unsigned count);

// Selectors: bernoulli | euler | monomial | exponential | random:<seed>.
// Throws std::invalid_argument on anything else.
AppellFamily make_family(const std::string& selector);

// The four named catalog selectors (random requires an explicit seed).
std::vector<std::string> catalog_names();

// (B_n(-x), (-1)^n B_n(x+1)), built via substitute; equal as polynomials.
std::pair<MultiPoly, MultiPoly> reflection_check(unsigned n);

}  // namespace appell
