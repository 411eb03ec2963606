#include "appell/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace appell {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_from_string(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view sv(s);
  std::string_view numpart = sv, denpart;
  if (auto slash = sv.find('/'); slash != std::string_view::npos) {
    numpart = sv.substr(0, slash);
    denpart = sv.substr(slash + 1);
  }
  std::string_view numdig = numpart;
  if (!numdig.empty() && (numdig[0] == '-' || numdig[0] == '+')) numdig.remove_prefix(1);
  if (!digits(numdig) || (!denpart.empty() && !digits(denpart)) ||
      (sv.find('/') != std::string_view::npos && denpart.empty()))
    throw std::invalid_argument("malformed rational literal: " + s);

  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

Rational rat_factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

Rational rat_falling(long n, unsigned long p) {
  mpz_class z(1);
  for (unsigned long i = 0; i < p; ++i) z *= mpz_class(n - static_cast<long>(i));
  return Rational(z);
}

}  // namespace appell
