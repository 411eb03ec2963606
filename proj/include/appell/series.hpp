#pragma once

#include <cstddef>
#include <vector>

#include "appell/multipoly.hpp"

namespace appell {

// Truncated formal power series in t with MultiPoly coefficients, stored as
// ordinary coefficients c_0..c_order (t itself is never materialized).
class PowerSeries {
 public:
  PowerSeries(const IndeterminateRegistry& reg, std::size_t order);
  explicit PowerSeries(std::vector<MultiPoly> coeffs);  // order = coeffs.size() - 1

  std::size_t order() const { return c_.size() - 1; }
  const IndeterminateRegistry& registry() const { return c_.front().registry(); }
  const MultiPoly& coeff(std::size_t n) const;  // throws std::out_of_range past order
  void set_coeff(std::size_t n, MultiPoly value);

 private:
  std::vector<MultiPoly> c_;
};

// Truncated product; both operands must have equal order.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse; requires a nonzero rational constant term.
PowerSeries series_inverse(const PowerSeries& f);

// log f with f(0) = 1, via the ODE recurrence n g_n = n f_n - sum k g_k f_{n-k}.
PowerSeries series_log(const PowerSeries& f);

// exp h with h(0) = 0, via n e_n = sum k h_k e_{n-k}.
PowerSeries series_exp(const PowerSeries& f);

// f^e = exp(e * log f) for a polynomial exponent; requires f(0) = 1.
PowerSeries series_pow_symbolic(const PowerSeries& f, const MultiPoly& e);

// n! * c_n. Throws std::out_of_range beyond the truncation order.
MultiPoly egf_coefficient(const PowerSeries& f, std::size_t n);

}  // namespace appell
