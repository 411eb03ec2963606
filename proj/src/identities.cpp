#include "appell/identities.hpp"

#include <memory>
#include <stdexcept>

namespace appell {

namespace {

const IndeterminateRegistry& reg() { return IndeterminateRegistry::standard(); }

MultiPoly X() { return MultiPoly::var(reg(), "x"); }
MultiPoly Y() { return MultiPoly::var(reg(), "y"); }
MultiPoly U_() { return MultiPoly::var(reg(), "u"); }
MultiPoly Alpha() { return MultiPoly::var(reg(), "alpha"); }
MultiPoly Beta() { return MultiPoly::var(reg(), "beta"); }
MultiPoly Q() { return MultiPoly::var(reg(), "q"); }
MultiPoly C(const Rational& r) { return MultiPoly::constant(reg(), r); }
MultiPoly C(long v) { return MultiPoly::constant(reg(), Rational(v)); }

CheckReport make_report(std::string identity,
                        std::vector<std::pair<std::string, std::string>> params,
                        std::string family, const Sides& sides) {
  CheckReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.family = std::move(family);
  r.pass = sides.first == sides.second;
  if (!r.pass) {
    r.lhs = sides.first.str();
    r.rhs = sides.second.str();
  }
  return r;
}

std::string kind_of_row(unsigned row) {
  switch (row) {
    case 1:
    case 2:
      return "euler";
    case 3:
    case 4:
      return "bernoulli";
    default:
      throw std::invalid_argument("xia row must be 1..4");
  }
}

void require_row_args(const std::string& fam_kind, unsigned row, unsigned n) {
  if (fam_kind != kind_of_row(row))
    throw std::invalid_argument("xia row " + std::to_string(row) + " is a " +
                                kind_of_row(row) + " identity, got family " + fam_kind);
  if ((row == 2 || row == 4) && n == 0)
    throw std::invalid_argument("xia row " + std::to_string(row) + " needs n >= 1");
}

}  // namespace

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

Sides symmetric_sides(const AppellFamily& fam, unsigned n, unsigned m) {
  MultiPoly lhs(reg()), rhs(reg());
  MultiPoly y = Y(), xy = X() + Y(), neg_y = -Y();
  for (unsigned k = 0; k <= n; ++k)
    lhs += fam.poly(m + k) * y.pow(n - k) * rat_binomial(n, k);
  for (unsigned k = 0; k <= m; ++k)
    rhs += fam.poly_at(n + k, xy) * neg_y.pow(m - k) * rat_binomial(m, k);
  return {lhs, rhs};
}

Sides symmetric_deriv_sides(const AppellFamily& fam, unsigned n, unsigned m, unsigned p) {
  if (p > n || p > m)
    throw std::invalid_argument("symmetric_deriv needs p <= min(n, m)");
  MultiPoly lhs(reg()), rhs(reg());
  MultiPoly y = Y(), xy = X() + Y(), neg_y = -Y();
  for (unsigned k = 0; k <= n; ++k)
    lhs += fam.poly(m - p + k) * y.pow(n - k) *
           (rat_binomial(n, k) * rat_binomial(m + k, p));
  for (unsigned k = 0; k <= m; ++k)
    rhs += fam.poly_at(n - p + k, xy) * neg_y.pow(m - k) *
           (rat_binomial(m, k) * rat_binomial(n + k, p));
  return {lhs, rhs};
}

Sides lemma_umbral_1_sides(const AppellFamily& fam, unsigned n) {
  MultiPoly lhs = fam.umbral_eval(substitute(fam.order_poly(n), "x", U_()));
  MultiPoly rhs = fam.order_poly_at(n, Alpha() + C(1), X());
  return {lhs, rhs};
}

Sides lemma_umbral_2_sides(const AppellFamily& fam, unsigned n) {
  MultiPoly fau = substitute(fam.order_poly(n), "x", U_());
  MultiPoly lhs = (Alpha() + C(1)) * fam.umbral_eval(U_() * fau);
  MultiPoly rhs = fam.order_poly_at(n + 1, Alpha() + C(1), X()) +
                  Alpha() * X() * fam.order_poly_at(n, Alpha() + C(1), X());
  return {lhs, rhs};
}

Sides remark_second_order_sides(const AppellFamily& fam, unsigned n) {
  MultiPoly fau = substitute(fam.order_poly(n), "x", U_());
  MultiPoly a = Alpha(), x = X();
  MultiPoly lhs = (a + C(2)) * (a + C(1)) * fam.umbral_eval(U_() * U_() * fau);
  MultiPoly rhs = fam.order_poly_at(n + 2, a + C(2), x) -
                  C(2) * x * fam.order_poly_at(n + 1, a + C(2), x) +
                  x * x * fam.order_poly_at(n, a + C(2), x) +
                  C(2) * (a + C(2)) * x * fam.order_poly_at(n + 1, a + C(1), x) +
                  (a + C(2)) * (a - C(1)) * x * x * fam.order_poly_at(n, a + C(1), x);
  return {lhs, rhs};
}

Sides second_order_convolution_sides(const AppellFamily& fam, unsigned n) {
  MultiPoly fau = substitute(fam.order_poly(n), "x", U_());
  MultiPoly x = X(), a = Alpha();
  MultiPoly lhs = fam.umbral_eval(U_() * U_() * fau);
  MultiPoly rhs = x * x * fam.order_poly_at(n, a + C(1), x);
  for (unsigned k = 0; k <= n; ++k) {
    MultiPoly weight = C(fam.moment(k + 2)) + C(2) * x * C(fam.moment(k + 1));
    rhs += weight * fam.order_poly_at(n - k, a, x) * rat_binomial(n, k);
  }
  return {lhs, rhs};
}

Sides corollary_alpha_sides(const AppellFamily& fam, unsigned n, unsigned m, unsigned p) {
  if (p > n || p > m)
    throw std::invalid_argument("corollary_alpha needs p <= min(n, m)");
  MultiPoly lhs(reg()), rhs(reg());
  MultiPoly y = Y(), xy = X() + Y(), neg_y = -Y(), a = Alpha();
  for (unsigned k = 0; k <= n; ++k)
    lhs += fam.order_poly_at(m - p + 1 + k, a, X()) * y.pow(n - k) *
           (rat_binomial(n, k) * rat_binomial(m + k, p));
  for (unsigned k = 0; k <= m; ++k)
    rhs += (fam.order_poly_at(n - p + 1 + k, a, xy) -
            y * fam.order_poly_at(n - p + k, a, xy)) *
           neg_y.pow(m - k) * (rat_binomial(m, k) * rat_binomial(n + k, p));
  return {lhs, rhs};
}

Sides abel_base_sides(const AppellFamily& fam, unsigned n) {
  (void)fam;  // the order-0 identity is family independent
  MultiPoly x = X(), y = Y(), q = Q();
  MultiPoly lhs = (x + y).pow(n);
  MultiPoly rhs(reg());
  for (unsigned k = 0; k <= n; ++k) {
    MultiPoly qk = q * C(static_cast<long>(k));
    MultiPoly head = (x - qk).pow(k);
    if (k >= 1) head += qk * (x - qk).pow(k - 1);
    rhs += head * (y + qk).pow(n - k) * rat_binomial(n, k);
  }
  return {lhs, rhs};
}

Sides abel_sides(const AppellFamily& fam, unsigned n) {
  MultiPoly x = X(), y = Y(), q = Q(), a = Alpha(), b = Beta();
  MultiPoly lhs = fam.order_poly_at(n, a + b, x + y);
  MultiPoly rhs(reg());
  for (unsigned k = 0; k <= n; ++k) {
    MultiPoly qk = q * C(static_cast<long>(k));
    MultiPoly head = fam.order_poly_at(k, a, x - qk);
    if (k >= 1) head += qk * fam.order_poly_at(k - 1, a, x - qk);
    rhs += head * fam.order_poly_at(n - k, b, y + qk) * rat_binomial(n, k);
  }
  return {lhs, rhs};
}

namespace {

// the four base sums on the left of Example rows, at a given order/point set
struct XiaParts {
  AppellFamily fam;
  unsigned N;        // exponent scale: rows 1,3 use 2n+1; rows 2,4 use 2n
  bool even_k;       // which binomial parity survives in the sum
};

XiaParts xia_parts(const std::string& fam_kind, unsigned row, unsigned n) {
  require_row_args(fam_kind, row, n);
  XiaParts p{make_family(fam_kind), (row == 1 || row == 3) ? 2 * n + 1 : 2 * n,
             row == 1 || row == 3};
  return p;
}

}  // namespace

Sides xia_base_sides(const std::string& fam_kind, unsigned row, unsigned n) {
  XiaParts pr = xia_parts(fam_kind, row, n);
  MultiPoly x = X(), xm1 = X() - C(1);
  MultiPoly lhs(reg());
  if (row == 1 || row == 3) {
    for (unsigned k = 0; k <= n; ++k)
      lhs += pr.fam.poly(2 * k) * rat_binomial(pr.N, 2 * k);
  } else {
    for (unsigned k = 1; k <= n; ++k)
      lhs += pr.fam.poly(2 * k - 1) * rat_binomial(pr.N, 2 * k - 1);
  }
  MultiPoly rhs(reg());
  switch (row) {
    case 1:
      rhs = x.pow(2 * n + 1) - xm1.pow(2 * n + 1);
      break;
    case 2:
      rhs = x.pow(2 * n) - xm1.pow(2 * n);
      break;
    case 3:
      rhs = (x.pow(2 * n) + xm1.pow(2 * n)) * rat(2 * static_cast<long>(n) + 1, 2);
      break;
    case 4:
      rhs = (x.pow(2 * n - 1) + xm1.pow(2 * n - 1)) * Rational(static_cast<long>(n));
      break;
  }
  return {lhs, rhs};
}

Sides xia_alpha_sides(const std::string& fam_kind, unsigned row, unsigned n) {
  XiaParts pr = xia_parts(fam_kind, row, n);
  MultiPoly x = X(), xm1 = X() - C(1), a = Alpha(), am1 = Alpha() - C(1);
  MultiPoly lhs(reg());
  if (row == 1 || row == 3) {
    for (unsigned k = 0; k <= n; ++k)
      lhs += pr.fam.order_poly_at(2 * k, a, x) * rat_binomial(pr.N, 2 * k);
  } else {
    for (unsigned k = 1; k <= n; ++k)
      lhs += pr.fam.order_poly_at(2 * k - 1, a, x) * rat_binomial(pr.N, 2 * k - 1);
  }
  MultiPoly rhs(reg());
  switch (row) {
    case 1:
    case 2:
      rhs = pr.fam.order_poly_at(pr.N, am1, x) - pr.fam.order_poly_at(pr.N, am1, xm1);
      break;
    case 3:
      rhs = (pr.fam.order_poly_at(2 * n, am1, x) + pr.fam.order_poly_at(2 * n, am1, xm1)) *
            rat(2 * static_cast<long>(n) + 1, 2);
      break;
    case 4:
      rhs = (pr.fam.order_poly_at(2 * n - 1, am1, x) +
             pr.fam.order_poly_at(2 * n - 1, am1, xm1)) *
            Rational(static_cast<long>(n));
      break;
  }
  return {lhs, rhs};
}

Sides xia_second_sides(const std::string& fam_kind, unsigned row, unsigned n) {
  XiaParts pr = xia_parts(fam_kind, row, n);
  MultiPoly x = X(), xm1 = X() - C(1), a = Alpha();
  MultiPoly ap1 = a + C(1);
  MultiPoly sum(reg());
  if (row == 1 || row == 3) {
    for (unsigned k = 0; k <= n; ++k)
      sum += pr.fam.order_poly_at(2 * k + 1, ap1, x) * rat_binomial(pr.N, 2 * k);
  } else {
    // the printed sum starts at k = 0 with C(2n, -1) = 0, so k = 1 onward
    for (unsigned k = 1; k <= n; ++k)
      sum += pr.fam.order_poly_at(2 * k, ap1, x) * rat_binomial(pr.N, 2 * k - 1);
  }
  MultiPoly lhs = a * sum;
  if (row == 3) lhs *= rat(2, 2 * static_cast<long>(n) + 1);
  if (row == 4) lhs *= rat(1, static_cast<long>(n));

  unsigned top = (row == 1) ? 2 * n + 2 : (row == 2) ? 2 * n + 1 : (row == 3) ? 2 * n + 1 : 2 * n;
  MultiPoly f_top_x = pr.fam.order_poly_at(top, a, x);
  MultiPoly f_sub_x = pr.fam.order_poly_at(top - 1, a, x);
  MultiPoly f_top_s = pr.fam.order_poly_at(top, a, xm1);
  MultiPoly f_sub_s = pr.fam.order_poly_at(top - 1, a, xm1);
  MultiPoly rhs(reg());
  if (row == 1 || row == 2) {
    rhs = ap1 * f_top_x - x * f_sub_x - ap1 * f_top_s + (x - a - C(1)) * f_sub_s;
  } else {
    // sign corrected: the printed -(x + alpha - 1) fails for every n
    rhs = ap1 * f_top_x - x * f_sub_x + ap1 * f_top_s - (x - a - C(1)) * f_sub_s;
  }
  return {lhs, rhs};
}

namespace {

Sides p3_like_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n, int stage,
                    bool same_order) {
  if (!s.admits(n))
    throw std::invalid_argument("schema '" + s.name + "' does not admit n = " +
                                std::to_string(n));
  MultiPoly lhs(reg()), rhs(reg());
  MultiPoly x = X(), a = Alpha();
  for (unsigned k = 0; k <= n; ++k) {
    MultiPoly uk = s.u(k), vk = s.v(k);
    MultiPoly pu = x + uk, pv = x + vk;
    switch (stage) {
      case 0:  // hypothesis
        lhs += s.U(n, k) * (same_order ? pu.pow(k) : fam.poly_at(k, pu));
        rhs += s.V(n, k) * pv.pow(k);
        break;
      case 1:
        lhs += s.U(n, k) * fam.order_poly_at(k, a, pu);
        rhs += s.V(n, k) * fam.order_poly_at(k, same_order ? a : a - C(1), pv);
        break;
      case 2:
        if (same_order) {
          lhs += s.U(n, k) *
                 (fam.order_poly_at(k + 1, a, pu) - uk * fam.order_poly_at(k, a, pu));
          rhs += s.V(n, k) *
                 (fam.order_poly_at(k + 1, a, pv) - vk * fam.order_poly_at(k, a, pv));
        } else {
          lhs += s.U(n, k) * (fam.order_poly_at(k + 1, a + C(1), pu) -
                              uk * fam.order_poly_at(k, a + C(1), pu));
          rhs += s.V(n, k) * ((a + C(1)) * fam.order_poly_at(k + 1, a, pv) -
                              (x + (a + C(1)) * vk) * fam.order_poly_at(k, a, pv));
        }
        break;
    }
  }
  if (stage == 2 && !same_order) lhs *= a;
  return {lhs, rhs};
}

}  // namespace

Sides p3_hypothesis_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n) {
  return p3_like_sides(s, fam, n, 0, false);
}
Sides p3_first_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n) {
  return p3_like_sides(s, fam, n, 1, false);
}
Sides p3_second_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n) {
  return p3_like_sides(s, fam, n, 2, false);
}
Sides p_hypothesis_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n) {
  return p3_like_sides(s, fam, n, 0, true);
}
Sides p_first_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n) {
  return p3_like_sides(s, fam, n, 1, true);
}
Sides p_second_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n) {
  return p3_like_sides(s, fam, n, 2, true);
}

namespace {

Sides gould_sides(unsigned n, unsigned m, int stage) {
  AppellFamily bern = make_family("bernoulli");
  MultiPoly x = X(), xp1 = X() + C(1), a = Alpha(), ap1 = Alpha() + C(1);
  MultiPoly lhs(reg()), rhs(reg());
  for (unsigned k = 0; k <= n; ++k) {
    Rational cl = rat_binomial(n, k) * rat_binomial(m, k) * (k % 2 == 0 ? 1 : -1);
    Rational cr = rat_binomial(n, k) * rat_binomial(m + k, n) *
                  ((n - k) % 2 == 0 ? 1 : -1);  // corrected from the printed C(m+k, k)
    switch (stage) {
      case 0:
        lhs += bern.poly(k) * cl;
        rhs += bern.poly_at(n - k, xp1) * cr;
        break;
      case 1:
        lhs += bern.order_poly_at(k, a, x) * cl;
        rhs += bern.order_poly_at(n - k, a, xp1) * cr;
        break;
      case 2:
        lhs += bern.order_poly_at(k + 1, ap1, x) * cl;
        rhs += (bern.order_poly_at(n + 1 - k, ap1, xp1) -
                bern.order_poly_at(n - k, ap1, xp1)) *
               cr;
        break;
    }
  }
  return {lhs, rhs};
}

}  // namespace

Sides gould_reflection_sides(unsigned n, unsigned m) { return gould_sides(n, m, 0); }
Sides gould_alpha_1_sides(unsigned n, unsigned m) { return gould_sides(n, m, 1); }
Sides gould_alpha_2_sides(unsigned n, unsigned m) { return gould_sides(n, m, 2); }

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Params nm(unsigned n) { return {{"n", std::to_string(n)}}; }
Params nm(unsigned n, unsigned m) {
  return {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
}
Params nmp(unsigned n, unsigned m, unsigned p) {
  return {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"p", std::to_string(p)}};
}

}  // namespace

CheckReport check_symmetric(const AppellFamily& fam, unsigned n, unsigned m) {
  return make_report("symmetric", nm(n, m), fam.name(), symmetric_sides(fam, n, m));
}

CheckReport check_symmetric_deriv(const AppellFamily& fam, unsigned n, unsigned m,
                                  unsigned p) {
  Sides s = symmetric_deriv_sides(fam, n, m, p);
  CheckReport r = make_report("symmetric_deriv", nmp(n, m, p), fam.name(), s);
  if (!r.pass) return r;
  // cross-check: each side is derivative(symmetric side, x, p) / p!
  Sides base = symmetric_sides(fam, n, m);
  Rational inv_pfac = Rational(1) / rat_factorial(p);
  MultiPoly dl = derivative(base.first, "x", p) * inv_pfac;
  MultiPoly dr = derivative(base.second, "x", p) * inv_pfac;
  if (dl != s.first) return make_report("symmetric_deriv", nmp(n, m, p), fam.name(), {s.first, dl});
  if (dr != s.second) return make_report("symmetric_deriv", nmp(n, m, p), fam.name(), {s.second, dr});
  return r;
}

std::vector<CheckReport> check_lemma_umbral(const AppellFamily& fam, unsigned n) {
  return {make_report("lemma_umbral_1", nm(n), fam.name(), lemma_umbral_1_sides(fam, n)),
          make_report("lemma_umbral_2", nm(n), fam.name(), lemma_umbral_2_sides(fam, n))};
}

CheckReport check_remark_second_order(const AppellFamily& fam, unsigned n) {
  return make_report("remark_second_order", nm(n), fam.name(),
                     remark_second_order_sides(fam, n));
}

CheckReport check_corollary_alpha(const AppellFamily& fam, unsigned n, unsigned m,
                                  unsigned p) {
  return make_report("corollary_alpha", nmp(n, m, p), fam.name(),
                     corollary_alpha_sides(fam, n, m, p));
}

std::vector<CheckReport> check_abel(const AppellFamily& famA, const AppellFamily& famB,
                                    unsigned n) {
  if (famA.name() != famB.name())
    throw std::invalid_argument("abel identity lives in a single family, got " +
                                famA.name() + " and " + famB.name());
  return {make_report("abel_base", nm(n), famA.name(), abel_base_sides(famA, n)),
          make_report("abel", nm(n), famA.name(), abel_sides(famA, n))};
}

std::vector<CheckReport> check_xia(const std::string& fam_kind, unsigned row, unsigned n) {
  Params ps{{"row", std::to_string(row)}, {"n", std::to_string(n)}};
  return {make_report("xia_base", ps, fam_kind, xia_base_sides(fam_kind, row, n)),
          make_report("xia_alpha", ps, fam_kind, xia_alpha_sides(fam_kind, row, n)),
          make_report("xia_second", ps, fam_kind, xia_second_sides(fam_kind, row, n))};
}

namespace {

std::vector<CheckReport> lift_reports(const IdentitySchema& s, const AppellFamily& fam,
                                      unsigned n, bool same_order, int stage) {
  Params ps{{"schema", s.name}};
  for (const auto& kv : s.extra_params) ps.push_back(kv);
  ps.emplace_back("stage", stage == 1 ? "first" : "second");
  ps.emplace_back("n", std::to_string(n));
  const char* hyp_name = same_order ? "p_hypothesis" : "p3_hypothesis";
  Sides hyp = same_order ? p_hypothesis_sides(s, fam, n) : p3_hypothesis_sides(s, fam, n);
  CheckReport h = make_report(hyp_name, ps, fam.name(), hyp);
  if (!h.pass) return {h};
  Sides concl = same_order
                    ? (stage == 1 ? p_first_sides(s, fam, n) : p_second_sides(s, fam, n))
                    : (stage == 1 ? p3_first_sides(s, fam, n) : p3_second_sides(s, fam, n));
  const char* name = same_order ? (stage == 1 ? "p_first" : "p_second")
                                : (stage == 1 ? "p3_first" : "p3_second");
  return {h, make_report(name, ps, fam.name(), concl)};
}

}  // namespace

std::vector<CheckReport> lift_p3_first(const IdentitySchema& s, const AppellFamily& fam,
                                       unsigned n) {
  return lift_reports(s, fam, n, false, 1);
}
std::vector<CheckReport> lift_p3_second(const IdentitySchema& s, const AppellFamily& fam,
                                        unsigned n) {
  return lift_reports(s, fam, n, false, 2);
}
std::vector<CheckReport> lift_p_first(const IdentitySchema& s, const AppellFamily& fam,
                                      unsigned n) {
  return lift_reports(s, fam, n, true, 1);
}
std::vector<CheckReport> lift_p_second(const IdentitySchema& s, const AppellFamily& fam,
                                       unsigned n) {
  return lift_reports(s, fam, n, true, 2);
}

std::vector<CheckReport> check_gould(const std::string& fam_kind, unsigned n, unsigned m) {
  if (fam_kind != "bernoulli")
    throw std::invalid_argument("gould identity is a bernoulli identity, got " + fam_kind);
  return {
      make_report("gould_reflection", nm(n, m), fam_kind, gould_reflection_sides(n, m)),
      make_report("gould_alpha_1", nm(n, m), fam_kind, gould_alpha_1_sides(n, m)),
      make_report("gould_alpha_2", nm(n, m), fam_kind, gould_alpha_2_sides(n, m))};
}

CheckReport check_reflection(unsigned n) {
  return make_report("reflection", nm(n), "bernoulli", reflection_check(n));
}

IdentitySchema schema_trivial(unsigned max_n) {
  IdentitySchema s;
  s.name = "trivial";
  s.max_n = max_n;
  s.U = s.V = [](unsigned n, unsigned k) { return C(k == n ? 1 : 0); };
  s.u = s.v = [](unsigned) { return C(0); };
  return s;
}

IdentitySchema schema_zero(unsigned max_n) {
  IdentitySchema s;
  s.name = "zero";
  s.max_n = max_n;
  s.U = s.V = [](unsigned, unsigned) { return MultiPoly(reg()); };
  s.u = s.v = [](unsigned) { return C(0); };
  return s;
}

IdentitySchema schema_xia(unsigned row, unsigned max_n) {
  if (row < 1 || row > 4) throw std::invalid_argument("xia row must be 1..4");
  IdentitySchema s;
  s.name = "xia_row" + std::to_string(row);
  s.max_n = max_n;
  bool odd_len = (row == 1 || row == 3);
  s.valid = [odd_len](unsigned n) { return odd_len ? (n % 2 == 1) : (n % 2 == 0 && n >= 2); };
  unsigned parity = odd_len ? 0 : 1;
  s.U = [parity](unsigned n, unsigned k) {
    return C(k % 2 == parity ? rat_binomial(n, k) : Rational(0));
  };
  if (row <= 2) {
    // x^N - (x-1)^N
    s.V = [](unsigned n, unsigned k) {
      Rational c = (k == n ? 1 : 0);
      c -= rat_binomial(n, k) * ((n - k) % 2 == 0 ? 1 : -1);
      return C(c);
    };
  } else {
    // (N/2) (x^{N-1} + (x-1)^{N-1})
    s.V = [](unsigned n, unsigned k) {
      Rational c = (k == n - 1 ? 1 : 0);
      if (k <= n - 1) c += rat_binomial(n - 1, k) * ((n - 1 - k) % 2 == 0 ? 1 : -1);
      return C(c * rat(static_cast<long>(n), 2));
    };
  }
  s.u = s.v = [](unsigned) { return C(0); };
  return s;
}

IdentitySchema schema_abel_q0(const AppellFamily& fam, unsigned max_n) {
  IdentitySchema s;
  s.name = "abel_q0";
  s.max_n = max_n;
  s.U = [](unsigned n, unsigned k) { return C(k == n ? 1 : 0); };
  s.V = [fam](unsigned n, unsigned k) {
    return fam.poly_at(n - k, Y()) * rat_binomial(n, k);
  };
  s.u = [](unsigned) { return Y(); };
  s.v = [](unsigned) { return C(0); };
  return s;
}

IdentitySchema schema_gould(unsigned m, unsigned max_n) {
  IdentitySchema s;
  s.name = "gould";
  s.max_n = max_n;
  s.extra_params = {{"m", std::to_string(m)}};
  auto moments = std::make_shared<std::vector<Rational>>(bernoulli_moments(max_n));
  s.U = [m](unsigned n, unsigned k) {
    return C(rat_binomial(n, k) * rat_binomial(m, k) * (k % 2 == 0 ? 1 : -1));
  };
  s.V = [m, moments](unsigned n, unsigned k) {
    Rational c(0);
    for (unsigned i = 0; i + k <= n; ++i)
      c += rat_binomial(n, k + i) * rat_binomial(m + n - k - i, n) * rat_binomial(k + i, i) *
           ((k + i) % 2 == 0 ? 1 : -1) * (*moments)[i];
    return C(c);
  };
  s.u = [](unsigned) { return C(0); };
  s.v = [](unsigned) { return C(1); };
  return s;
}

IdentitySchema schema_ljunggren(unsigned max_n) {
  IdentitySchema s;
  s.name = "ljunggren";
  s.max_n = max_n;
  MultiPoly lam = MultiPoly::var(reg(), "lambda");
  s.U = [lam](unsigned n, unsigned k) {
    return binomial_symbolic(lam, static_cast<long>(n - k)) * Y().pow(n - k) *
           rat_binomial(n, n - k);
  };
  s.V = [lam](unsigned n, unsigned k) {
    return binomial_symbolic(lam + C(static_cast<long>(n - k)), static_cast<long>(n - k)) *
           Y().pow(n - k) * rat_binomial(n, n - k);
  };
  s.u = [](unsigned) { return Y(); };
  s.v = [](unsigned) { return C(0); };
  return s;
}

IdentitySchema schema_munarini(unsigned max_n) {
  IdentitySchema s;
  s.name = "munarini";
  s.max_n = max_n;
  MultiPoly gam = MultiPoly::var(reg(), "gamma");
  MultiPoly bet = Beta();
  s.U = [gam, bet](unsigned n, unsigned k) {
    return binomial_symbolic(gam, static_cast<long>(n - k)) *
           binomial_symbolic(bet - gam + C(static_cast<long>(n)), static_cast<long>(k)) *
           Y().pow(n - k);
  };
  // the second binomial is corrected: the printed C(gamma, n-k) holds only
  // on the hyperplane beta = 2 gamma - n
  s.V = [gam, bet](unsigned n, unsigned k) {
    return binomial_symbolic(bet - gam + C(static_cast<long>(n)), static_cast<long>(k)) *
           binomial_symbolic(bet + C(static_cast<long>(n - k)), static_cast<long>(n - k)) *
           Y().pow(n - k);
  };
  s.u = [](unsigned) { return Y(); };
  s.v = [](unsigned) { return C(0); };
  return s;
}

IdentitySchema schema_simons(unsigned max_n) {
  IdentitySchema s;
  s.name = "simons";
  s.max_n = max_n;
  auto coeff = [](unsigned n, unsigned k) -> Rational {
    return rat_factorial(n + k) / (rat_factorial(n - k) * rat_factorial(k) * rat_factorial(k));
  };
  s.U = [coeff](unsigned n, unsigned k) {
    return C(coeff(n, k) * ((n + k) % 2 == 0 ? 1 : -1));
  };
  s.V = [coeff](unsigned n, unsigned k) { return C(coeff(n, k)); };
  s.u = [](unsigned) { return C(1); };
  s.v = [](unsigned) { return C(0); };
  return s;
}

}  // namespace appell
