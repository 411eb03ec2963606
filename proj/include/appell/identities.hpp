#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "appell/families.hpp"
#include "appell/family.hpp"

namespace appell {

struct CheckReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order kept
  std::string family;
  bool pass = false;
  std::string lhs, rhs;  // canonical sides, filled on failure only
};

bool all_pass(const std::vector<CheckReport>& reports);

// Hypothesis data for the two lifting propositions: coefficient rules
// U(n,k), V(n,k) (free of x) and shift rules u(k), v(k). `valid` restricts
// the admissible n (e.g. parity for the Xia rows).
struct IdentitySchema {
  std::string name;
  unsigned max_n = 0;
  std::function<bool(unsigned)> valid;  // null means every n <= max_n
  std::function<MultiPoly(unsigned, unsigned)> U, V;
  std::function<MultiPoly(unsigned)> u, v;
  std::vector<std::pair<std::string, std::string>> extra_params;  // copied into reports

  bool admits(unsigned n) const { return n <= max_n && (!valid || valid(n)); }
};

using Sides = std::pair<MultiPoly, MultiPoly>;

// Side builders. Each returns (lhs, rhs) of the corresponding display with
// every free parameter symbolic.
Sides symmetric_sides(const AppellFamily& fam, unsigned n, unsigned m);
Sides symmetric_deriv_sides(const AppellFamily& fam, unsigned n, unsigned m, unsigned p);
Sides lemma_umbral_1_sides(const AppellFamily& fam, unsigned n);
Sides lemma_umbral_2_sides(const AppellFamily& fam, unsigned n);  // (alpha+1)-cleared
Sides remark_second_order_sides(const AppellFamily& fam, unsigned n);
Sides second_order_convolution_sides(const AppellFamily& fam, unsigned n);
Sides corollary_alpha_sides(const AppellFamily& fam, unsigned n, unsigned m, unsigned p);
Sides abel_base_sides(const AppellFamily& fam, unsigned n);
Sides abel_sides(const AppellFamily& fam, unsigned n);
Sides xia_base_sides(const std::string& fam_kind, unsigned row, unsigned n);
Sides xia_alpha_sides(const std::string& fam_kind, unsigned row, unsigned n);
Sides xia_second_sides(const std::string& fam_kind, unsigned row, unsigned n);
Sides p3_hypothesis_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n);
Sides p3_first_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n);
Sides p3_second_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n);
Sides p_hypothesis_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n);
Sides p_first_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n);
Sides p_second_sides(const IdentitySchema& s, const AppellFamily& fam, unsigned n);
Sides gould_reflection_sides(unsigned n, unsigned m);
Sides gould_alpha_1_sides(unsigned n, unsigned m);
Sides gould_alpha_2_sides(unsigned n, unsigned m);

// Checkers. Multi-display statements return one report per display.
CheckReport check_symmetric(const AppellFamily& fam, unsigned n, unsigned m);
CheckReport check_symmetric_deriv(const AppellFamily& fam, unsigned n, unsigned m, unsigned p);
std::vector<CheckReport> check_lemma_umbral(const AppellFamily& fam, unsigned n);
CheckReport check_remark_second_order(const AppellFamily& fam, unsigned n);
CheckReport check_corollary_alpha(const AppellFamily& fam, unsigned n, unsigned m, unsigned p);
std::vector<CheckReport> check_abel(const AppellFamily& famA, const AppellFamily& famB,
                                    unsigned n);
std::vector<CheckReport> check_xia(const std::string& fam_kind, unsigned row, unsigned n);
std::vector<CheckReport> lift_p3_first(const IdentitySchema& s, const AppellFamily& fam,
                                       unsigned n);
std::vector<CheckReport> lift_p3_second(const IdentitySchema& s, const AppellFamily& fam,
                                        unsigned n);
std::vector<CheckReport> lift_p_first(const IdentitySchema& s, const AppellFamily& fam,
                                      unsigned n);
std::vector<CheckReport> lift_p_second(const IdentitySchema& s, const AppellFamily& fam,
                                       unsigned n);
std::vector<CheckReport> check_gould(const std::string& fam_kind, unsigned n, unsigned m);
CheckReport check_reflection(unsigned n);

// Schema catalog.
IdentitySchema schema_trivial(unsigned max_n = 16);
IdentitySchema schema_zero(unsigned max_n = 16);
IdentitySchema schema_xia(unsigned row, unsigned max_n = 16);  // n is the sum length N
IdentitySchema schema_abel_q0(const AppellFamily& fam, unsigned max_n = 16);
IdentitySchema schema_gould(unsigned m, unsigned max_n = 16);
IdentitySchema schema_ljunggren(unsigned max_n = 16);
IdentitySchema schema_munarini(unsigned max_n = 16);
IdentitySchema schema_simons(unsigned max_n = 16);

struct SuiteConfig {
  std::string suite = "all";
  unsigned max_n = 4;
  unsigned max_m = 4;
  std::optional<unsigned> max_p;            // default: min(n, m)
  std::vector<std::string> families;        // empty: the default seven
  std::optional<unsigned long long> seed;   // adds random:<seed> to the family set
  bool inject_failure = false;
  unsigned threads = 1;
};

std::vector<std::string> suite_names();
std::vector<std::string> default_families();

// Deterministic, ordered report list over the configured grid. Unknown
// suite or family selectors throw std::invalid_argument.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

}  // namespace appell
