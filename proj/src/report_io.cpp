#include "appell/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace appell {

namespace {

bool is_integer_literal(const std::string& v) {
  std::size_t i = (!v.empty() && v[0] == '-') ? 1 : 0;
  if (i == v.size()) return false;
  return std::all_of(v.begin() + static_cast<long>(i), v.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string joined_params(const CheckReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

std::pair<std::size_t, std::size_t> tally(const std::vector<CheckReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  return {passed, reports.size() - passed};
}

}  // namespace

std::string render_reports_json(const std::string& suite,
                                const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["cases"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json c;
    c["identity"] = r.identity;
    c["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
      if (is_integer_literal(v))
        c["params"][k] = std::stoll(v);
      else
        c["params"][k] = v;
    }
    c["family"] = r.family;
    c["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) {
      c["lhs"] = r.lhs;
      c["rhs"] = r.rhs;
    }
    doc["cases"].push_back(std::move(c));
  }
  auto [passed, failed] = tally(reports);
  doc["passed"] = passed;
  doc["failed"] = failed;
  return doc.dump(2) + "\n";
}

std::string render_reports_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << "identity,family,params,status,lhs,rhs\n";
  for (const auto& r : reports)
    out << r.identity << ',' << r.family << ',' << joined_params(r) << ','
        << (r.pass ? "pass" : "fail") << ',' << r.lhs << ',' << r.rhs << '\n';
  return out.str();
}

std::string render_reports_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.pass ? "pass" : "FAIL") << ' ' << r.identity << ' ' << r.family;
    std::string ps = joined_params(r);
    if (!ps.empty()) out << ' ' << ps;
    out << '\n';
    if (!r.pass) {
      out << "  lhs: " << r.lhs << '\n';
      out << "  rhs: " << r.rhs << '\n';
    }
  }
  auto [passed, failed] = tally(reports);
  out << passed << " passed, " << failed << " failed\n";
  return out.str();
}

}  // namespace appell
