#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "appell/bell.hpp"
#include "appell/families.hpp"
#include "appell/identities.hpp"
#include "appell/rational.hpp"
#include "appell/series.hpp"

namespace py = pybind11;

namespace {

using namespace appell;

std::string poly_text(const std::string& family, unsigned n) {
  return make_family(family).poly(n).str();
}

std::string order_poly_text(const std::string& family, unsigned n, const std::string& route) {
  AppellFamily::Route r;
  if (route == "bell")
    r = AppellFamily::Route::bell;
  else if (route == "series")
    r = AppellFamily::Route::series;
  else
    throw std::invalid_argument("route must be 'bell' or 'series'");
  return make_family(family).order_poly(n, r).str();
}

std::string evaluate(const std::string& family, unsigned n, const std::string& x,
                     const std::string& order) {
  AppellFamily fam = make_family(family);
  MultiPoly point = MultiPoly::constant(fam.registry(), rat_from_string(x));
  return rat_to_string(
      fam.order_poly_at(n, rat_from_string(order), point).constant_value());
}

std::string umbral_eval_text(const std::string& family, const std::string& expr) {
  AppellFamily fam = make_family(family);
  return fam.umbral_eval(MultiPoly::parse(fam.registry(), expr)).str();
}

std::vector<std::string> moments_text(const std::string& family, unsigned count) {
  AppellFamily fam = make_family(family);
  std::vector<std::string> out;
  out.reserve(count + 1);
  for (unsigned n = 0; n <= count; ++n) out.push_back(rat_to_string(fam.moment(n)));
  return out;
}

std::vector<std::string> series_text(const std::string& family, const std::string& alpha,
                                     unsigned terms) {
  AppellFamily fam = make_family(family);
  const auto& reg = fam.registry();
  MultiPoly exponent = (alpha == "symbolic")
                           ? MultiPoly::var(reg, "alpha")
                           : MultiPoly::constant(reg, rat_from_string(alpha));
  PowerSeries F(reg, terms);
  for (unsigned j = 0; j <= terms; ++j)
    F.set_coeff(j, MultiPoly::constant(reg, fam.moment(j) / rat_factorial(j)));
  PowerSeries P = series_pow_symbolic(F, exponent);
  std::vector<std::string> out;
  out.reserve(terms + 1);
  for (unsigned n = 0; n <= terms; ++n) out.push_back(egf_coefficient(P, n).str());
  return out;
}

std::string bell_text(unsigned n, unsigned k,
                      const std::optional<std::vector<std::string>>& args_in) {
  unsigned count = (k <= n) ? (n - k + 1) : 1;
  IndeterminateRegistry reg = IndeterminateRegistry::bell_args(count);
  std::vector<MultiPoly> args;
  if (args_in) {
    for (const auto& a : *args_in)
      args.push_back(MultiPoly::constant(reg, rat_from_string(a)));
  } else {
    for (unsigned i = 0; i < count; ++i) args.push_back(MultiPoly::var(reg, i));
  }
  return bell_partial(n, k, args).str();
}

py::list run_suite_py(const std::string& suite, unsigned max_n, unsigned max_m,
                      std::optional<unsigned> max_p, std::vector<std::string> families,
                      std::optional<unsigned long long> seed, bool inject_failure,
                      unsigned threads) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.max_n = max_n;
  cfg.max_m = max_m;
  cfg.max_p = max_p;
  cfg.families = std::move(families);
  cfg.seed = seed;
  cfg.inject_failure = inject_failure;
  cfg.threads = threads;
  py::list out;
  for (const auto& r : run_suite(cfg)) {
    py::dict d;
    d["identity"] = r.identity;
    py::dict ps;
    for (const auto& [k, v] : r.params) ps[py::str(k)] = v;
    d["params"] = ps;
    d["family"] = r.family;
    d["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) {
      d["lhs"] = r.lhs;
      d["rhs"] = r.rhs;
    }
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Appell polynomial toolkit (bindings over the C++ core)";

  m.def("catalog", &catalog_names, "Named family selectors");
  m.def("suites", &suite_names, "Known suite selectors");
  m.def("default_families", &default_families, "Default family set for run_suite");
  m.def("moments", &moments_text, py::arg("family"), py::arg("count"),
        "Moments a_0..a_count as exact rational strings");
  m.def("poly", &poly_text, py::arg("family"), py::arg("n"),
        "Canonical text of f_n(x)");
  m.def("order_poly", &order_poly_text, py::arg("family"), py::arg("n"),
        py::arg("route") = "bell", "Canonical text of f_n^(alpha)(x), symbolic alpha");
  m.def("evaluate", &evaluate, py::arg("family"), py::arg("n"), py::arg("x") = "0",
        py::arg("order") = "1", "Exact value of f_n^(order)(x)");
  m.def("umbral_eval", &umbral_eval_text, py::arg("family"), py::arg("expr"),
        "Apply the umbral substitution u^j -> f_j(x) to a polynomial in u");
  m.def("series", &series_text, py::arg("family"), py::arg("alpha") = "symbolic",
        py::arg("terms") = 4, "EGF coefficients of F^alpha as canonical text");
  m.def("bell", &bell_text, py::arg("n"), py::arg("k"),
        py::arg("args") = py::none(), "Partial Bell polynomial B_{n,k}");
  m.def("run_suite", &run_suite_py, py::arg("suite") = "all", py::arg("max_n") = 4,
        py::arg("max_m") = 4, py::arg("max_p") = py::none(),
        py::arg("families") = std::vector<std::string>{}, py::arg("seed") = py::none(),
        py::arg("inject_failure") = false, py::arg("threads") = 1,
        "Run an identity suite; returns one dict per checked case");
}
