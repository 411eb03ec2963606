#include "appell/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace appell {

bool GrlexDesc::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(const IndeterminateRegistry& reg, const Rational& c) {
  MultiPoly p(reg);
  p.add_term(Exponents(reg.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::var(const IndeterminateRegistry& reg, std::size_t idx, unsigned power) {
  if (idx >= reg.size()) throw std::out_of_range("indeterminate index out of range");
  MultiPoly p(reg);
  Exponents e(reg.size(), 0);
  e[idx] = power;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::var(const IndeterminateRegistry& reg, std::string_view name, unsigned power) {
  return var(reg, reg.index(name), power);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

bool MultiPoly::contains(std::size_t idx) const {
  for (const auto& [e, c] : terms_)
    if (e[idx] != 0) return true;
  return false;
}

unsigned MultiPoly::degree(std::size_t idx) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;  // grlex-descending: first term is maximal
  return std::accumulate(e.begin(), e.end(), 0u);
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != reg_->size()) throw std::invalid_argument("exponent vector size mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (*reg_ != *o.reg_) throw std::invalid_argument("registry mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (*reg_ != *o.reg_) throw std::invalid_argument("registry mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.registry() != b.registry()) throw std::invalid_argument("registry mismatch");
  MultiPoly out(a.registry());
  MultiPoly::Exponents e(a.registry().size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return *reg_ == *o.reg_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly out = constant(*reg_, Rational(1));
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return out;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value) {
  if (var >= p.registry().size()) throw std::out_of_range("indeterminate index out of range");
  if (p.registry() != value.registry()) throw std::invalid_argument("registry mismatch");
  std::vector<MultiPoly> powers{MultiPoly::constant(p.registry(), Rational(1))};
  unsigned maxe = p.degree(var);
  powers.reserve(maxe + 1);
  for (unsigned i = 1; i <= maxe; ++i) powers.push_back(powers.back() * value);
  MultiPoly out(p.registry());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents rest = e;
    unsigned ev = rest[var];
    rest[var] = 0;
    MultiPoly mono(p.registry());
    mono.add_term(rest, c);
    out += mono * powers[ev];
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& value) {
  return substitute(p, p.registry().index(var), value);
}

MultiPoly substitute(const MultiPoly& p, std::size_t var, const Rational& value) {
  return substitute(p, var, MultiPoly::constant(p.registry(), value));
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const Rational& value) {
  return substitute(p, p.registry().index(var), value);
}

MultiPoly derivative(const MultiPoly& p, std::size_t var, unsigned times) {
  if (var >= p.registry().size()) throw std::out_of_range("indeterminate index out of range");
  MultiPoly cur = p;
  for (unsigned r = 0; r < times; ++r) {
    MultiPoly next(p.registry());
    for (const auto& [e, c] : cur.terms()) {
      if (e[var] == 0) continue;
      MultiPoly::Exponents d = e;
      d[var] -= 1;
      next.add_term(d, c * Rational(e[var]));
    }
    cur = std::move(next);
  }
  return cur;
}

MultiPoly derivative(const MultiPoly& p, std::string_view var, unsigned times) {
  return derivative(p, p.registry().index(var), times);
}

MultiPoly falling_factorial(const MultiPoly& a, unsigned k) {
  MultiPoly out = MultiPoly::constant(a.registry(), Rational(1));
  for (unsigned i = 0; i < k; ++i)
    out *= a - MultiPoly::constant(a.registry(), Rational(static_cast<long>(i)));
  return out;
}

MultiPoly binomial_symbolic(const MultiPoly& a, long k) {
  if (k < 0) return MultiPoly(a.registry());
  MultiPoly out = falling_factorial(a, static_cast<unsigned>(k));
  Rational inv = Rational(1) / rat_factorial(static_cast<unsigned long>(k));
  return out * inv;
}

std::map<unsigned, MultiPoly> collect(const MultiPoly& p, std::size_t var) {
  if (var >= p.registry().size()) throw std::out_of_range("indeterminate index out of range");
  std::map<unsigned, MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents rest = e;
    unsigned ev = rest[var];
    rest[var] = 0;
    auto it = out.find(ev);
    if (it == out.end()) it = out.emplace(ev, MultiPoly(p.registry())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += reg_->name(i);
      if (e[i] > 1) {
        vars += '^';
        vars += std::to_string(e[i]);
      }
    }
    if (vars.empty()) {
      os << rat_to_string(mag);
    } else if (mag == 1) {
      os << vars;
    } else {
      os << rat_to_string(mag) << '*' << vars;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

std::string take_number(Lexer& lx) {
  lx.skip_ws();
  std::size_t start = lx.i;
  while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
  if (lx.i == start) throw std::invalid_argument("expected digits in polynomial text");
  return std::string(lx.s.substr(start, lx.i - start));
}

std::string take_name(Lexer& lx) {
  lx.skip_ws();
  std::size_t start = lx.i;
  while (lx.i < lx.s.size() &&
         (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
    ++lx.i;
  return std::string(lx.s.substr(start, lx.i - start));
}

}  // namespace

MultiPoly MultiPoly::parse(const IndeterminateRegistry& reg, std::string_view text) {
  Lexer lx{text};
  MultiPoly out(reg);
  if (lx.eof()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (!lx.eof()) {
    Rational sign(1);
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      if (c == '-') sign = -1;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff = sign;
    Exponents e(reg.size(), 0);
    bool any_factor = false;
    while (true) {
      if (lx.eof()) break;
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        std::string num = take_number(lx);
        std::string lit = num;
        if (!lx.eof() && lx.peek() == '/') {
          lx.take();
          lit += '/' + take_number(lx);
        }
        coeff *= rat_from_string(lit);
        any_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name = take_name(lx);
        std::size_t idx = reg.index(name);  // throws on unknown
        unsigned power = 1;
        if (!lx.eof() && lx.peek() == '^') {
          lx.take();
          power = static_cast<unsigned>(std::stoul(take_number(lx)));
        }
        e[idx] += power;
        any_factor = true;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + p +
                                    "' in polynomial text");
      }
      if (lx.eof() || lx.peek() != '*') break;
      lx.take();
      if (lx.eof()) throw std::invalid_argument("dangling '*' in polynomial text");
    }
    if (!any_factor) throw std::invalid_argument("empty term in polynomial text");
    out.add_term(e, coeff);
  }
  return out;
}

}  // namespace appell
