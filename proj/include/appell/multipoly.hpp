#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "appell/rational.hpp"
#include "appell/registry.hpp"

namespace appell {

// Graded lexicographic, descending: higher total degree first, ties broken
// by lexicographically larger exponent vector first. Serialization order.
struct GrlexDesc {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Sparse multivariate polynomial over Rational. Canonical at all times:
// no zero coefficients, exponent vectors sized to the registry, fixed term
// order. Equality is structural.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational, GrlexDesc>;

  explicit MultiPoly(const IndeterminateRegistry& reg) : reg_(&reg) {}

  static MultiPoly constant(const IndeterminateRegistry& reg, const Rational& c);
  static MultiPoly var(const IndeterminateRegistry& reg, std::size_t idx, unsigned power = 1);
  static MultiPoly var(const IndeterminateRegistry& reg, std::string_view name, unsigned power = 1);

  const IndeterminateRegistry& registry() const { return *reg_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // throws std::logic_error if non-constant
  bool contains(std::size_t idx) const;
  unsigned degree(std::size_t idx) const;
  unsigned total_degree() const;  // 0 for the zero polynomial
  Rational coefficient(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned e) const;

  // Canonical text form, e.g. "x^2 - x + 1/6" or "1/2*x*y - alpha".
  std::string str() const;

  // Inverse of str(); tolerant of extra whitespace. Throws
  // std::invalid_argument on malformed input or unknown names.
  static MultiPoly parse(const IndeterminateRegistry& reg, std::string_view text);

  void add_term(const Exponents& e, const Rational& c);

 private:
  const IndeterminateRegistry* reg_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);

// Replace indeterminate `var` by `value` (full polynomial substitution).
MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value);
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& value);
MultiPoly substitute(const MultiPoly& p, std::size_t var, const Rational& value);
MultiPoly substitute(const MultiPoly& p, std::string_view var, const Rational& value);

MultiPoly derivative(const MultiPoly& p, std::size_t var, unsigned times = 1);
MultiPoly derivative(const MultiPoly& p, std::string_view var, unsigned times = 1);

// a(a-1)...(a-k+1); (a)_0 = 1.
MultiPoly falling_factorial(const MultiPoly& a, unsigned k);

// C(a, k) = (a)_k / k! for k >= 0; 0 for k < 0 (adopted convention).
MultiPoly binomial_symbolic(const MultiPoly& a, long k);

// Coefficients of p as a polynomial in `var`: power -> coefficient
// (coefficient free of `var`). Absent powers are absent keys.
std::map<unsigned, MultiPoly> collect(const MultiPoly& p, std::size_t var);

}  // namespace appell
