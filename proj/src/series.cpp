#include "appell/series.hpp"

#include <stdexcept>

namespace appell {

PowerSeries::PowerSeries(const IndeterminateRegistry& reg, std::size_t order)
    : c_(order + 1, MultiPoly(reg)) {}

PowerSeries::PowerSeries(std::vector<MultiPoly> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
  for (const auto& p : c_)
    if (p.registry() != c_.front().registry())
      throw std::invalid_argument("registry mismatch across series coefficients");
}

const MultiPoly& PowerSeries::coeff(std::size_t n) const {
  if (n >= c_.size()) throw std::out_of_range("coefficient index beyond truncation order");
  return c_[n];
}

void PowerSeries::set_coeff(std::size_t n, MultiPoly value) {
  if (n >= c_.size()) throw std::out_of_range("coefficient index beyond truncation order");
  if (value.registry() != registry())
    throw std::invalid_argument("registry mismatch in series coefficient");
  c_[n] = std::move(value);
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series_mul requires equal truncation orders");
  PowerSeries out(a.registry(), a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    MultiPoly s(a.registry());
    for (std::size_t k = 0; k <= n; ++k) s += a.coeff(k) * b.coeff(n - k);
    out.set_coeff(n, std::move(s));
  }
  return out;
}

PowerSeries series_inverse(const PowerSeries& f) {
  if (!f.coeff(0).is_constant() || f.coeff(0).is_zero())
    throw std::invalid_argument("series_inverse requires a nonzero rational constant term");
  Rational inv0 = Rational(1) / f.coeff(0).constant_value();
  PowerSeries g(f.registry(), f.order());
  g.set_coeff(0, MultiPoly::constant(f.registry(), inv0));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    MultiPoly s(f.registry());
    for (std::size_t k = 1; k <= n; ++k) s += f.coeff(k) * g.coeff(n - k);
    g.set_coeff(n, s * Rational(-inv0));
  }
  return g;
}

PowerSeries series_log(const PowerSeries& f) {
  if (!f.coeff(0).is_constant() || f.coeff(0).constant_value() != 1)
    throw std::invalid_argument("series_log requires constant term 1");
  PowerSeries g(f.registry(), f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    MultiPoly s = f.coeff(n) * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k)
      s -= g.coeff(k) * f.coeff(n - k) * Rational(static_cast<long>(k));
    g.set_coeff(n, s * (Rational(1) / Rational(static_cast<long>(n))));
  }
  return g;
}

PowerSeries series_exp(const PowerSeries& f) {
  if (!f.coeff(0).is_zero())
    throw std::invalid_argument("series_exp requires constant term 0");
  PowerSeries g(f.registry(), f.order());
  g.set_coeff(0, MultiPoly::constant(f.registry(), Rational(1)));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    MultiPoly s(f.registry());
    for (std::size_t k = 1; k <= n; ++k)
      s += f.coeff(k) * g.coeff(n - k) * Rational(static_cast<long>(k));
    g.set_coeff(n, s * (Rational(1) / Rational(static_cast<long>(n))));
  }
  return g;
}

PowerSeries series_pow_symbolic(const PowerSeries& f, const MultiPoly& e) {
  if (e.registry() != f.registry())
    throw std::invalid_argument("registry mismatch between series and exponent");
  PowerSeries lg = series_log(f);
  PowerSeries scaled(f.registry(), f.order());
  for (std::size_t n = 0; n <= f.order(); ++n) scaled.set_coeff(n, lg.coeff(n) * e);
  return series_exp(scaled);
}

MultiPoly egf_coefficient(const PowerSeries& f, std::size_t n) {
  return f.coeff(n) * rat_factorial(n);
}

}  // namespace appell
