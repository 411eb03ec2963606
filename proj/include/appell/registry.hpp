#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace appell {

// Immutable ordered list of indeterminate names. Polynomials hold a pointer
// to their registry; two polynomials interoperate iff their registries are
// equal as name lists.
class IndeterminateRegistry {
 public:
  explicit IndeterminateRegistry(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws std::invalid_argument

  bool operator==(const IndeterminateRegistry& o) const { return names_ == o.names_; }
  bool operator!=(const IndeterminateRegistry& o) const { return !(*this == o); }

  // x, y, u, alpha, beta, gamma, lambda, q, t. "u" is the umbral placeholder.
  static const IndeterminateRegistry& standard();

  // x1..x<count>, for Bell polynomial arguments.
  static IndeterminateRegistry bell_args(std::size_t count);

 private:
  std::vector<std::string> names_;
};

}  // namespace appell
