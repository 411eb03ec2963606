#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "appell/bell.hpp"
#include "appell/families.hpp"
#include "appell/identities.hpp"
#include "appell/rational.hpp"
#include "appell/report_io.hpp"
#include "appell/series.hpp"

namespace {

using namespace appell;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

unsigned env_threads() {
  const char* v = std::getenv("APPELL_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  unsigned long n = std::strtoul(v, &end, 10);
  if (end == v || *end != '\0' || n == 0) return 1;
  return static_cast<unsigned>(n);
}

// EGF of F^exponent truncated at `order`, built from the family moments.
PowerSeries family_egf_pow(const AppellFamily& fam, const MultiPoly& exponent,
                           unsigned order) {
  const auto& reg = fam.registry();
  PowerSeries F(reg, order);
  for (unsigned j = 0; j <= order; ++j)
    F.set_coeff(j, MultiPoly::constant(reg, fam.moment(j) / rat_factorial(j)));
  return series_pow_symbolic(F, exponent);
}

struct CommonOpts {
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to a file instead of stdout");
}

int cmd_check(const SuiteConfig& cfg, const CommonOpts& o) {
  std::vector<CheckReport> reports = run_suite(cfg);
  std::string text;
  if (o.format == "json")
    text = render_reports_json(cfg.suite, reports);
  else if (o.format == "csv")
    text = render_reports_csv(reports);
  else
    text = render_reports_text(reports);
  int rc = emit(text, o.out);
  if (rc != 0) return rc;
  return all_pass(reports) ? 0 : 1;
}

int cmd_table(const std::string& family, unsigned max_n, const std::string& order,
              const CommonOpts& o) {
  AppellFamily fam = make_family(family);
  MultiPoly x = MultiPoly::var(fam.registry(), "x");
  std::vector<std::string> rows;
  for (unsigned n = 0; n <= max_n; ++n) {
    MultiPoly p = (order == "symbolic")
                      ? fam.order_poly(n)
                      : fam.order_poly_at(n, rat_from_string(order), x);
    rows.push_back(p.str());
  }
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = family;
    doc["order"] = order;
    doc["rows"] = nlohmann::ordered_json::array();
    for (unsigned n = 0; n <= max_n; ++n)
      doc["rows"].push_back({{"n", n}, {"polynomial", rows[n]}});
    text = doc.dump(2) + "\n";
  } else if (o.format == "csv") {
    std::ostringstream s;
    s << "n,polynomial\n";
    for (unsigned n = 0; n <= max_n; ++n) s << n << ',' << rows[n] << '\n';
    text = s.str();
  } else {
    std::ostringstream s;
    for (const auto& r : rows) s << r << '\n';
    text = s.str();
  }
  return emit(text, o.out);
}

int cmd_eval(const std::string& family, unsigned n, const std::string& x_text,
             const std::string& order_text, const CommonOpts& o) {
  AppellFamily fam = make_family(family);
  Rational xv = rat_from_string(x_text);
  Rational ov = rat_from_string(order_text);
  MultiPoly point = MultiPoly::constant(fam.registry(), xv);
  std::string value = rat_to_string(fam.order_poly_at(n, ov, point).constant_value());
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json doc{{"family", family},
                               {"n", n},
                               {"x", x_text},
                               {"order", order_text},
                               {"value", value}};
    text = doc.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "family,n,x,order,value\n" + family + "," + std::to_string(n) + "," + x_text +
           "," + order_text + "," + value + "\n";
  } else {
    text = value + "\n";
  }
  return emit(text, o.out);
}

int cmd_series(const std::string& family, const std::string& alpha, unsigned terms,
               const CommonOpts& o) {
  AppellFamily fam = make_family(family);
  const auto& reg = fam.registry();
  MultiPoly exponent = (alpha == "symbolic")
                           ? MultiPoly::var(reg, "alpha")
                           : MultiPoly::constant(reg, rat_from_string(alpha));
  PowerSeries s = family_egf_pow(fam, exponent, terms);
  std::vector<std::string> coeffs;
  for (unsigned n = 0; n <= terms; ++n) coeffs.push_back(egf_coefficient(s, n).str());
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = family;
    doc["alpha"] = alpha;
    doc["coefficients"] = coeffs;
    text = doc.dump(2) + "\n";
  } else if (o.format == "csv") {
    std::ostringstream out;
    out << "n,coefficient\n";
    for (unsigned n = 0; n <= terms; ++n) out << n << ',' << coeffs[n] << '\n';
    text = out.str();
  } else {
    std::ostringstream out;
    for (unsigned n = 0; n <= terms; ++n) out << (n ? ", " : "") << coeffs[n];
    out << '\n';
    text = out.str();
  }
  return emit(text, o.out);
}

int cmd_bell(unsigned n, unsigned k, const std::string& args_text, const CommonOpts& o) {
  unsigned count = (k <= n) ? (n - k + 1) : 1;
  IndeterminateRegistry reg = IndeterminateRegistry::bell_args(count);
  std::vector<MultiPoly> args;
  if (args_text.empty()) {
    for (unsigned i = 0; i < count; ++i) args.push_back(MultiPoly::var(reg, i));
  } else {
    std::stringstream ss(args_text);
    std::string item;
    while (std::getline(ss, item, ','))
      args.push_back(MultiPoly::constant(reg, rat_from_string(item)));
  }
  std::string poly = bell_partial(n, k, args).str();
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json doc{{"n", n}, {"k", k}, {"polynomial", poly}};
    text = doc.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "n,k,polynomial\n" + std::to_string(n) + "," + std::to_string(k) + "," + poly +
           "\n";
  } else {
    text = poly + "\n";
  }
  return emit(text, o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier and toolkit for Appell polynomial identities"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  cfg.threads = env_threads();
  CommonOpts check_o;
  unsigned long long seed_val = 0;
  auto* check = app.add_subcommand("check", "Run an identity suite");
  check->add_option("--suite", cfg.suite, "Suite name (see --help-suites)")
      ->capture_default_str();
  check->add_option("--max-n", cfg.max_n, "Largest n in the grid")->capture_default_str();
  check->add_option("--max-m", cfg.max_m, "Largest m in the grid")->capture_default_str();
  unsigned max_p_val = 0;
  auto* maxp_opt =
      check->add_option("--max-p", max_p_val, "Cap on the order p (default min(n, m))");
  check->add_option("--family", cfg.families,
                    "Family selector, repeatable (default: full catalog + three seeds)");
  auto* seed_opt = check->add_option("--seed", seed_val, "Add random:<seed> to the family set");
  check->add_flag("--inject-failure", cfg.inject_failure,
                  "Append one artificial failing case (exit-code test hook)");
  check->add_option("--threads", cfg.threads, "Worker threads (or APPELL_THREADS)");
  add_common(check, check_o);

  std::string t_family, t_order = "1";
  unsigned t_n = 4;
  CommonOpts table_o;
  auto* table = app.add_subcommand("table", "Print f_n rows 0..n");
  table->add_option("--family", t_family, "Family selector")->required();
  table->add_option("--n", t_n, "Largest row index")->capture_default_str();
  table->add_option("--order", t_order, "Rational order or 'symbolic'")
      ->capture_default_str();
  add_common(table, table_o);

  std::string e_family, e_x = "0", e_order = "1";
  unsigned e_n = 0;
  CommonOpts eval_o;
  auto* eval = app.add_subcommand("eval", "Evaluate f_n^(order) at a rational point");
  eval->add_option("--family", e_family, "Family selector")->required();
  eval->add_option("--n", e_n, "Index n")->required();
  eval->add_option("--x", e_x, "Evaluation point (p/q)")->capture_default_str();
  eval->add_option("--order", e_order, "Order (p/q)")->capture_default_str();
  add_common(eval, eval_o);

  std::string s_family, s_alpha = "symbolic";
  unsigned s_terms = 4;
  CommonOpts series_o;
  auto* series = app.add_subcommand("series", "EGF coefficients of F^alpha");
  series->add_option("--family", s_family, "Family selector")->required();
  series->add_option("--alpha", s_alpha, "Rational exponent or 'symbolic'")
      ->capture_default_str();
  series->add_option("--terms", s_terms, "Largest coefficient index")->capture_default_str();
  add_common(series, series_o);

  unsigned b_n = 0, b_k = 0;
  std::string b_args;
  CommonOpts bell_o;
  auto* bell = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}");
  bell->add_option("--n", b_n, "n")->required();
  bell->add_option("--k", b_k, "k")->required();
  bell->add_option("--args", b_args, "Comma-separated rationals (default symbolic x1..)");
  add_common(bell, bell_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      if (seed_opt->count() > 0) cfg.seed = seed_val;
      if (maxp_opt->count() > 0) cfg.max_p = max_p_val;
      return cmd_check(cfg, check_o);
    }
    if (table->parsed()) return cmd_table(t_family, t_n, t_order, table_o);
    if (eval->parsed()) return cmd_eval(e_family, e_n, e_x, e_order, eval_o);
    if (series->parsed()) return cmd_series(s_family, s_alpha, s_terms, series_o);
    if (bell->parsed()) return cmd_bell(b_n, b_k, b_args, bell_o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
