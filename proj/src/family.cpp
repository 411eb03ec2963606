#include "appell/family.hpp"

#include <stdexcept>

#include "appell/bell.hpp"

namespace appell {

MomentSequence::MomentSequence(std::string name, std::function<Rational(unsigned)> gen)
    : name_(std::move(name)), gen_(std::move(gen)) {
  if (!gen_) throw std::invalid_argument("moment sequence needs a generator");
  Rational a0 = gen_(0);
  if (a0 != 1)
    throw std::invalid_argument("moment sequence '" + name_ + "' has a_0 = " +
                                rat_to_string(a0) + ", expected 1");
  cache_.resize(1);
  cache_[0] = a0;
}

MomentSequence::MomentSequence(const MomentSequence& o) : name_(o.name_), gen_(o.gen_) {
  std::lock_guard<std::mutex> lk(o.mu_);
  cache_ = o.cache_;
}

Rational MomentSequence::at(unsigned n) const {
  std::lock_guard<std::mutex> lk(mu_);
  if (cache_.size() <= n) cache_.resize(n + 1);
  if (!cache_[n]) cache_[n] = gen_(n);
  return *cache_[n];
}

AppellFamily::AppellFamily(MomentSequence moments)
    : moments_(std::move(moments)), reg_(&IndeterminateRegistry::standard()) {
  xi_ = reg_->index("x");
  ui_ = reg_->index("u");
  ai_ = reg_->index("alpha");
}

MultiPoly AppellFamily::poly(unsigned n) const {
  MultiPoly out(*reg_);
  MultiPoly::Exponents e(reg_->size(), 0);
  for (unsigned k = 0; k <= n; ++k) {
    e[xi_] = n - k;
    out.add_term(e, rat_binomial(n, k) * moments_.at(k));
  }
  return out;
}

MultiPoly AppellFamily::poly_at(unsigned n, const MultiPoly& point) const {
  MultiPoly out(*reg_);
  for (unsigned k = 0; k <= n; ++k)
    out += point.pow(n - k) * (rat_binomial(n, k) * moments_.at(k));
  return out;
}

MultiPoly AppellFamily::binomial_type_coeffs(unsigned n) const {
  if (n == 0) return MultiPoly::constant(*reg_, Rational(1));
  std::vector<MultiPoly> args;
  args.reserve(n);
  for (unsigned j = 1; j <= n; ++j)
    args.push_back(MultiPoly::constant(*reg_, moments_.at(j)));
  MultiPoly alpha = MultiPoly::var(*reg_, ai_);
  MultiPoly out(*reg_);
  for (unsigned k = 1; k <= n; ++k)
    out += bell_partial(n, k, args) * falling_factorial(alpha, k);
  return out;
}

MultiPoly AppellFamily::order_poly(unsigned n, Route route) const {
  if (route == Route::bell) {
    MultiPoly x = MultiPoly::var(*reg_, xi_);
    MultiPoly out(*reg_);
    for (unsigned k = 0; k <= n; ++k)
      out += binomial_type_coeffs(k) * x.pow(n - k) * rat_binomial(n, k);
    return out;
  }
  // series route: exp(alpha log F) * e^{xt}, EGF coefficient n
  PowerSeries f(*reg_, n);
  for (unsigned j = 0; j <= n; ++j)
    f.set_coeff(j, MultiPoly::constant(*reg_, moments_.at(j) / rat_factorial(j)));
  PowerSeries falpha = series_pow_symbolic(f, MultiPoly::var(*reg_, ai_));
  PowerSeries ext(*reg_, n);
  MultiPoly x = MultiPoly::var(*reg_, xi_);
  for (unsigned j = 0; j <= n; ++j)
    ext.set_coeff(j, x.pow(j) * (Rational(1) / rat_factorial(j)));
  return egf_coefficient(series_mul(falpha, ext), n);
}

MultiPoly AppellFamily::order_poly_at(unsigned n, const MultiPoly& order,
                                      const MultiPoly& point) const {
  MultiPoly base = order_poly(n);
  // substitute alpha first through a spare slot so `order` may itself
  // mention alpha (e.g. alpha + 1)
  std::size_t ti = reg_->index("t");
  if (order.contains(ti) || point.contains(ti))
    throw std::invalid_argument("t is reserved during order substitution");
  base = substitute(base, ai_, MultiPoly::var(*reg_, ti));
  base = substitute(base, xi_, point);
  return substitute(base, ti, order);
}

MultiPoly AppellFamily::order_poly_at(unsigned n, const Rational& order,
                                      const MultiPoly& point) const {
  return order_poly_at(n, MultiPoly::constant(*reg_, order), point);
}

MultiPoly AppellFamily::umbral_eval(const MultiPoly& q) const {
  if (q.contains(xi_))
    throw std::invalid_argument("umbral_eval input must not contain x");
  MultiPoly out(*reg_);
  for (const auto& [power, coeff] : collect(q, ui_)) out += coeff * poly(power);
  return out;
}

std::pair<MultiPoly, MultiPoly> AppellFamily::appell_derivative_check(unsigned n,
                                                                      unsigned p) const {
  if (p > n) return {MultiPoly(*reg_), MultiPoly(*reg_)};
  MultiPoly lhs = derivative(poly(n), xi_, p);
  MultiPoly rhs = poly(n - p) * rat_falling(static_cast<long>(n), p);
  return {lhs, rhs};
}

}  // namespace appell
