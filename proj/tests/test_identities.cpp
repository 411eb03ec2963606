#include <string>
#include <vector>

#include "appell/identities.hpp"
#include "appell/report_io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace appell;

namespace {

const IndeterminateRegistry& reg() { return IndeterminateRegistry::standard(); }

MultiPoly V(const char* n) { return MultiPoly::var(reg(), n); }
MultiPoly C(const Rational& v) { return MultiPoly::constant(reg(), v); }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("symmetric identity") {
  AppellFamily mono = make_family("monomial");
  for (unsigned n = 0; n <= 2; ++n)
    for (unsigned m = 0; m <= 2; ++m) CHECK(check_symmetric(mono, n, m).pass);
  for (const std::string& name : {"bernoulli", "euler", "random:3"}) {
    AppellFamily fam = make_family(name);
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned m = 0; m <= 3; ++m) {
        CheckReport r = check_symmetric(fam, n, m);
        CHECK(r.pass);
        CHECK(r.identity == "symmetric");
        CHECK(r.family == name);
      }
  }
}

TEST_CASE("symmetric identity survives the parameter swap") {
  // Swapping (n, m) matches mapping x -> x + y, y -> -y on the other side.
  AppellFamily bern = make_family("bernoulli");
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m) {
      Sides s = symmetric_sides(bern, n, m);
      Sides sw = symmetric_sides(bern, m, n);
      MultiPoly moved = substitute(sw.first, "x", V("t"));
      moved = substitute(moved, "y", -V("y"));
      moved = substitute(moved, "t", V("x") + V("y"));
      CHECK(moved == s.second);
    }
}

TEST_CASE("symmetric derivative identity") {
  AppellFamily bern = make_family("bernoulli");
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned p = 0; p <= std::min(n, m); ++p)
        CHECK(check_symmetric_deriv(bern, n, m, p).pass);
  CHECK_THROWS_AS(symmetric_deriv_sides(bern, 2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_symmetric_deriv(bern, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("umbral composition lemma") {
  for (const std::string& name : {"bernoulli", "euler", "exponential", "random:5"}) {
    AppellFamily fam = make_family(name);
    for (unsigned n = 0; n <= 5; ++n) {
      auto rs = check_lemma_umbral(fam, n);
      REQUIRE(rs.size() == 2);
      CHECK(rs[0].identity == "lemma_umbral_1");
      CHECK(rs[1].identity == "lemma_umbral_2");
      CHECK(rs[0].pass);
      CHECK(rs[1].pass);
    }
  }
}

TEST_CASE("cleared second umbral identity vanishes at order -1") {
  for (const std::string& name : {"bernoulli", "euler"}) {
    AppellFamily fam = make_family(name);
    for (unsigned n = 0; n <= 4; ++n) {
      Sides s = lemma_umbral_2_sides(fam, n);
      CHECK(substitute(s.first, "alpha", rat(-1)).is_zero());
      CHECK(substitute(s.second, "alpha", rat(-1)).is_zero());
    }
  }
}

TEST_CASE("second-order umbral formula holds only for the monomials") {
  AppellFamily mono = make_family("monomial");
  for (unsigned n = 0; n <= 4; ++n) CHECK(check_remark_second_order(mono, n).pass);
  for (const std::string& name : {"bernoulli", "euler", "exponential"}) {
    AppellFamily fam = make_family(name);
    for (unsigned n = 0; n <= 3; ++n) {
      CheckReport r = check_remark_second_order(fam, n);
      CHECK_FALSE(r.pass);
      CHECK(!r.lhs.empty());
      CHECK(!r.rhs.empty());
    }
  }
}

TEST_CASE("second-order residuals at n = 0 have closed forms") {
  MultiPoly a = V("alpha"), one = C(rat(1));
  auto residual = [&](const char* name) {
    Sides s = remark_second_order_sides(make_family(name), 0);
    return s.first - s.second;
  };
  CHECK(residual("bernoulli") ==
        (a + C(rat(2))) * (a + C(rat(3))) * rat(-1, 12));
  CHECK(residual("euler") == (a + one) * (a + C(rat(2))) * rat(-1, 4));
  CHECK(residual("exponential") == -(a + C(rat(2))));
  CHECK(residual("monomial").is_zero());
}

TEST_CASE("second-order convolution form holds for every family") {
  for (const std::string& name : default_families()) {
    AppellFamily fam = make_family(name);
    for (unsigned n = 0; n <= 4; ++n) {
      Sides s = second_order_convolution_sides(fam, n);
      CHECK(s.first == s.second);
    }
  }
}

TEST_CASE("order-alpha derivative corollary") {
  for (const std::string& name : {"bernoulli", "random:2"}) {
    AppellFamily fam = make_family(name);
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned p = 0; p <= std::min(n, m); ++p)
          CHECK(check_corollary_alpha(fam, n, m, p).pass);
  }
  CHECK_THROWS_AS(corollary_alpha_sides(make_family("bernoulli"), 1, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("abel convolution") {
  AppellFamily bern = make_family("bernoulli");
  AppellFamily eul = make_family("euler");
  for (unsigned n = 0; n <= 4; ++n) {
    auto rs = check_abel(bern, bern, n);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].identity == "abel_base");
    CHECK(rs[1].identity == "abel");
    CHECK(rs[0].pass);
    CHECK(rs[1].pass);
  }
  CHECK(check_abel(eul, eul, 3)[1].pass);
  CHECK_THROWS_AS(check_abel(bern, eul, 2), std::invalid_argument);
}

TEST_CASE("alternating binomial rows") {
  for (unsigned row = 1; row <= 4; ++row) {
    std::string kind = row <= 2 ? "euler" : "bernoulli";
    for (unsigned n = (row % 2 == 0) ? 1u : 0u; n <= 2; ++n) {
      auto rs = check_xia(kind, row, n);
      REQUIRE(rs.size() == 3);
      CHECK(rs[0].identity == "xia_base");
      CHECK(rs[1].identity == "xia_alpha");
      CHECK(rs[2].identity == "xia_second");
      for (const auto& r : rs) CHECK(r.pass);
    }
  }
  CHECK_THROWS_AS(check_xia("euler", 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_xia("bernoulli", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(xia_base_sides("euler", 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(xia_base_sides("euler", 5, 1), std::invalid_argument);
}

TEST_CASE("alpha = 1 specializes the lifted rows to the base rows") {
  for (unsigned row = 1; row <= 4; ++row) {
    std::string kind = row <= 2 ? "euler" : "bernoulli";
    for (unsigned n = (row % 2 == 0) ? 1u : 0u; n <= 2; ++n) {
      Sides lifted = xia_alpha_sides(kind, row, n);
      Sides base = xia_base_sides(kind, row, n);
      CHECK(substitute(lifted.first, "alpha", rat(1)) == base.first);
      CHECK(substitute(lifted.second, "alpha", rat(1)) == base.second);
    }
  }
}

TEST_CASE("hypothesis gates the lifted conclusions") {
  AppellFamily mono = make_family("monomial");
  AppellFamily bern = make_family("bernoulli");
  IdentitySchema triv = schema_trivial();
  // f_n(x) = x^n holds for the monomials, so both reports appear.
  auto rs = lift_p3_first(triv, mono, 3);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].identity == "p3_hypothesis");
  CHECK(rs[1].identity == "p3_first");
  CHECK(rs[0].pass);
  CHECK(rs[1].pass);
  // It fails for Bernoulli, so the conclusion is never evaluated.
  auto rf = lift_p3_first(triv, bern, 2);
  REQUIRE(rf.size() == 1);
  CHECK(rf[0].identity == "p3_hypothesis");
  CHECK_FALSE(rf[0].pass);
}

TEST_CASE("zero schema lifts trivially everywhere") {
  IdentitySchema z = schema_zero();
  for (const std::string& name : {"bernoulli", "random:1"}) {
    AppellFamily fam = make_family(name);
    for (auto lift : {lift_p3_first, lift_p3_second, lift_p_first, lift_p_second}) {
      auto rs = lift(z, fam, 3);
      REQUIRE(rs.size() == 2);
      CHECK(rs[0].pass);
      CHECK(rs[1].pass);
    }
  }
}

TEST_CASE("translation schema lifts in both stages") {
  for (const std::string& name : {"bernoulli", "euler"}) {
    AppellFamily fam = make_family(name);
    IdentitySchema s = schema_abel_q0(fam);
    for (unsigned n = 0; n <= 3; ++n) {
      for (auto lift : {lift_p3_first, lift_p3_second}) {
        auto rs = lift(s, fam, n);
        REQUIRE(rs.size() == 2);
        CHECK(rs[0].pass);
        CHECK(rs[1].pass);
      }
    }
  }
}

TEST_CASE("alternating-row schemas lift over their pinned families") {
  for (unsigned row = 1; row <= 4; ++row) {
    AppellFamily fam = make_family(row <= 2 ? "euler" : "bernoulli");
    IdentitySchema s = schema_xia(row);
    unsigned start = (row % 2 == 1) ? 1u : 2u;
    for (unsigned N = start; N <= 5; N += 2) {
      for (auto lift : {lift_p3_first, lift_p3_second}) {
        auto rs = lift(s, fam, N);
        REQUIRE(rs.size() == 2);
        CHECK(rs[0].pass);
        CHECK(rs[1].pass);
      }
    }
    CHECK_THROWS_AS(lift_p3_first(s, fam, start + 1), std::invalid_argument);
  }
  // The even-index rows hold only with the matching family.
  auto cross = lift_p3_first(schema_xia(1), make_family("bernoulli"), 3);
  REQUIRE(cross.size() == 1);
  CHECK_FALSE(cross[0].pass);
}

TEST_CASE("reflection-type schema lifts") {
  AppellFamily bern = make_family("bernoulli");
  for (unsigned m = 0; m <= 3; ++m) {
    IdentitySchema s = schema_gould(m);
    for (unsigned n = 0; n <= 3; ++n) {
      for (auto lift : {lift_p3_first, lift_p3_second}) {
        auto rs = lift(s, bern, n);
        REQUIRE(rs.size() == 2);
        CHECK(rs[0].pass);
        CHECK(rs[1].pass);
      }
    }
  }
}

TEST_CASE("same-order schemas lift for every family") {
  for (const std::string& name : {"bernoulli", "euler", "random:3"}) {
    AppellFamily fam = make_family(name);
    for (auto factory : {schema_ljunggren, schema_munarini, schema_simons}) {
      IdentitySchema s = factory(16);
      for (unsigned n = 0; n <= 3; ++n) {
        for (auto lift : {lift_p_first, lift_p_second}) {
          auto rs = lift(s, fam, n);
          REQUIRE(rs.size() == 2);
          CHECK(rs[0].identity == "p_hypothesis");
          CHECK(rs[0].pass);
          CHECK(rs[1].pass);
        }
      }
    }
  }
}

TEST_CASE("first-stage lifts specialize back to their hypotheses") {
  AppellFamily bern = make_family("bernoulli");
  IdentitySchema s = schema_abel_q0(bern);
  Sides hyp = p3_hypothesis_sides(s, bern, 3);
  Sides first = p3_first_sides(s, bern, 3);
  // f^{(1)} is the family and f^{(0)} the monomials.
  CHECK(substitute(first.first, "alpha", rat(1)) == hyp.first);
  CHECK(substitute(first.second, "alpha", rat(1)) == hyp.second);
  AppellFamily eul = make_family("euler");
  IdentitySchema lj = schema_ljunggren();
  Sides hyp2 = p_hypothesis_sides(lj, eul, 3);
  Sides first2 = p_first_sides(lj, eul, 3);
  CHECK(substitute(first2.first, "alpha", rat(0)) == hyp2.first);
  CHECK(substitute(first2.second, "alpha", rat(0)) == hyp2.second);
}

TEST_CASE("bernoulli reflection pair") {
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m) {
      auto rs = check_gould("bernoulli", n, m);
      REQUIRE(rs.size() == 3);
      CHECK(rs[0].identity == "gould_reflection");
      CHECK(rs[1].identity == "gould_alpha_1");
      CHECK(rs[2].identity == "gould_alpha_2");
      for (const auto& r : rs) CHECK(r.pass);
    }
  CHECK_THROWS_AS(check_gould("euler", 1, 1), std::invalid_argument);
  Sides lifted = gould_alpha_1_sides(2, 3);
  Sides base = gould_reflection_sides(2, 3);
  CHECK(substitute(lifted.first, "alpha", rat(1)) == base.first);
  CHECK(substitute(lifted.second, "alpha", rat(1)) == base.second);
}

TEST_CASE("run_suite: documented symmetric example") {
  SuiteConfig cfg;
  cfg.suite = "symmetric";
  cfg.max_n = 2;
  cfg.max_m = 2;
  cfg.families = {"monomial"};
  auto rs = run_suite(cfg);
  CHECK(rs.size() == 9);
  CHECK(all_pass(rs));
  for (const auto& r : rs) {
    CHECK(r.identity == "symmetric");
    CHECK(r.family == "monomial");
  }
}

TEST_CASE("run_suite: every suite is green on the monomials") {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.max_n = 2;
  cfg.max_m = 2;
  cfg.families = {"monomial"};
  auto rs = run_suite(cfg);
  CHECK(!rs.empty());
  CHECK(all_pass(rs));
}

TEST_CASE("run_suite: threaded run matches the serial run byte for byte") {
  SuiteConfig cfg;
  cfg.suite = "symmetric";
  cfg.max_n = 3;
  cfg.max_m = 2;
  cfg.families = {"bernoulli", "random:2"};
  auto serial = run_suite(cfg);
  cfg.threads = 4;
  auto threaded = run_suite(cfg);
  CHECK(render_reports_json("symmetric", serial) ==
        render_reports_json("symmetric", threaded));
}

TEST_CASE("run_suite: seed appends a random family") {
  SuiteConfig cfg;
  cfg.suite = "lemma_umbral";
  cfg.max_n = 1;
  cfg.families = {"monomial"};
  cfg.seed = 9;
  auto rs = run_suite(cfg);
  bool seen = false;
  for (const auto& r : rs) seen = seen || r.family == "random:9";
  CHECK(seen);
  CHECK(all_pass(rs));
}

TEST_CASE("run_suite: bad selectors throw") {
  SuiteConfig cfg;
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.suite = "all";
  cfg.families = {"mystery"};
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("run_suite: injected failure lands last and flips the verdict") {
  SuiteConfig cfg;
  cfg.suite = "symmetric";
  cfg.max_n = 1;
  cfg.max_m = 1;
  cfg.families = {"monomial"};
  cfg.inject_failure = true;
  auto rs = run_suite(cfg);
  REQUIRE(!rs.empty());
  CHECK_FALSE(all_pass(rs));
  const CheckReport& last = rs.back();
  CHECK(last.identity == "injected_failure");
  CHECK_FALSE(last.pass);
  CHECK(last.lhs == "0");
  CHECK(last.rhs == "1");
}

TEST_CASE("all_pass on the empty list") { CHECK(all_pass({})); }

TEST_CASE("json report shape") {
  SuiteConfig cfg;
  cfg.suite = "remark_second_order";
  cfg.max_n = 1;
  cfg.families = {"monomial", "bernoulli"};
  auto rs = run_suite(cfg);
  auto doc = nlohmann::json::parse(render_reports_json(cfg.suite, rs));
  CHECK(doc["suite"] == "remark_second_order");
  REQUIRE(doc["cases"].is_array());
  CHECK(doc["passed"].get<int>() + doc["failed"].get<int>() ==
        static_cast<int>(doc["cases"].size()));
  CHECK(doc["failed"].get<int>() > 0);
  for (const auto& c : doc["cases"]) {
    CHECK(c["identity"].is_string());
    CHECK(c["params"].is_object());
    CHECK(c["params"]["n"].is_number_integer());
    CHECK(c["family"].is_string());
    REQUIRE(c["status"].is_string());
    if (c["status"] == "fail") {
      CHECK(c["lhs"].is_string());
      CHECK(c["rhs"].is_string());
    } else {
      CHECK(!c.contains("lhs"));
    }
  }
}

TEST_CASE("csv report parses back into polynomials") {
  AppellFamily bern = make_family("bernoulli");
  std::vector<CheckReport> rs = {check_remark_second_order(bern, 0)};
  std::string csv = render_reports_csv(rs);
  auto lines = split(csv, '\n');
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "identity,family,params,status,lhs,rhs");
  auto fields = split(lines[1], ',');
  REQUIRE(fields.size() == 6);
  CHECK(fields[0] == "remark_second_order");
  CHECK(fields[1] == "bernoulli");
  CHECK(fields[2] == "n=0");
  CHECK(fields[3] == "fail");
  MultiPoly lhs = MultiPoly::parse(reg(), fields[4]);
  MultiPoly rhs = MultiPoly::parse(reg(), fields[5]);
  MultiPoly a = V("alpha");
  CHECK(lhs - rhs == (a + C(rat(2))) * (a + C(rat(3))) * rat(-1, 12));
}

TEST_CASE("text report carries a summary line") {
  AppellFamily mono = make_family("monomial");
  std::vector<CheckReport> rs = {check_symmetric(mono, 1, 1),
                                 check_remark_second_order(make_family("euler"), 0)};
  std::string text = render_reports_text(rs);
  CHECK(text.find("pass symmetric monomial n=1;m=1") != std::string::npos);
  CHECK(text.find("FAIL remark_second_order euler n=0") != std::string::npos);
  CHECK(text.find("  lhs: ") != std::string::npos);
  CHECK(text.find("1 passed, 1 failed\n") != std::string::npos);
}
