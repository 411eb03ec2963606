#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "appell/multipoly.hpp"
#include "appell/series.hpp"

namespace appell {

// Memoized moment generator a_0, a_1, ... with a_0 = 1 enforced at
// construction. Thread-safe: the suite may evaluate checkers concurrently.
class MomentSequence {
 public:
  MomentSequence(std::string name, std::function<Rational(unsigned)> gen);
  MomentSequence(const MomentSequence& o);
  MomentSequence& operator=(const MomentSequence&) = delete;

  const std::string& name() const { return name_; }
  Rational at(unsigned n) const;

 private:
  std::string name_;
  std::function<Rational(unsigned)> gen_;
  mutable std::mutex mu_;
  mutable std::vector<std::optional<Rational>> cache_;
};

// An Appell family f_n(x) = sum_k C(n,k) a_k x^{n-k} over the standard
// registry, together with its order-alpha extension generated by
// F(t)^alpha e^{xt}.
class AppellFamily {
 public:
  enum class Route { bell, series };

  explicit AppellFamily(MomentSequence moments);

  const std::string& name() const { return moments_.name(); }
  const IndeterminateRegistry& registry() const { return *reg_; }
  Rational moment(unsigned n) const { return moments_.at(n); }

  // f_n(x), and f_n at an arbitrary polynomial argument.
  MultiPoly poly(unsigned n) const;
  MultiPoly poly_at(unsigned n, const MultiPoly& point) const;

  // f_n^{(alpha)}(x) with symbolic alpha. Route::bell builds
  // sum_k C(n,k) g_k(alpha) x^{n-k}; Route::series extracts the EGF
  // coefficient of exp(alpha log F) e^{xt}. The two must agree.
  MultiPoly order_poly(unsigned n, Route route = Route::bell) const;

  // f_n^{(order)} at a polynomial argument, order an arbitrary polynomial
  // (e.g. alpha + 1) or a rational constant.
  MultiPoly order_poly_at(unsigned n, const MultiPoly& order, const MultiPoly& point) const;
  MultiPoly order_poly_at(unsigned n, const Rational& order, const MultiPoly& point) const;

  // g_n(alpha) = f_n^{(alpha)}(0) = sum_k B_{n,k}(a_1, a_2, ...) (alpha)_k.
  MultiPoly binomial_type_coeffs(unsigned n) const;

  // Linear map u^j -> f_j(x) after collecting powers of u. The input must
  // not contain x (std::invalid_argument).
  MultiPoly umbral_eval(const MultiPoly& q) const;

  // (D_x^p f_n, (n)_p f_{n-p}); both zero when p > n.
  std::pair<MultiPoly, MultiPoly> appell_derivative_check(unsigned n, unsigned p) const;

 private:
  MomentSequence moments_;
  const IndeterminateRegistry* reg_;
  std::size_t xi_, ui_, ai_;
};

}  // namespace appell
