#include "appell/registry.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace appell {

namespace {

bool valid_name(const std::string& n) {
  if (n.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_') return false;
  for (char c : n)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

IndeterminateRegistry::IndeterminateRegistry(std::vector<std::string> names)
    : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw std::invalid_argument("bad indeterminate name: '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate indeterminate: " + n);
  }
}

const std::string& IndeterminateRegistry::name(std::size_t i) const {
  if (i >= names_.size()) throw std::out_of_range("indeterminate index out of range");
  return names_[i];
}

std::optional<std::size_t> IndeterminateRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t IndeterminateRegistry::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown indeterminate: " + std::string(name));
}

const IndeterminateRegistry& IndeterminateRegistry::standard() {
  static const IndeterminateRegistry reg(
      {"x", "y", "u", "alpha", "beta", "gamma", "lambda", "q", "t"});
  return reg;
}

IndeterminateRegistry IndeterminateRegistry::bell_args(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
  return IndeterminateRegistry(std::move(names));
}

}  // namespace appell
