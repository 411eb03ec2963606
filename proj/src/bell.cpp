#include "appell/bell.hpp"

#include <optional>
#include <stdexcept>

namespace appell {

namespace {

const IndeterminateRegistry& args_registry(const std::vector<MultiPoly>& args) {
  return args.empty() ? IndeterminateRegistry::standard() : args.front().registry();
}

void require_args(unsigned n, unsigned k, const std::vector<MultiPoly>& args) {
  unsigned needed = n - k + 1;
  if (args.size() < needed)
    throw std::invalid_argument("bell polynomial needs the first " + std::to_string(needed) +
                                " arguments, got " + std::to_string(args.size()));
  for (const auto& a : args)
    if (a.registry() != args.front().registry())
      throw std::invalid_argument("registry mismatch across bell arguments");
}

}  // namespace

MultiPoly bell_partial(unsigned n, unsigned k, const std::vector<MultiPoly>& args) {
  const auto& reg = args_registry(args);
  if (k > n) return MultiPoly(reg);
  if (n == 0) return MultiPoly::constant(reg, Rational(1));  // k == 0 here
  if (k == 0) return MultiPoly(reg);
  require_args(n, k, args);

  // table[m][j] = B_{m,j}, filled bottom-up over the recurrence
  // B_{m,j} = sum_{i=1}^{m-j+1} C(m-1, i-1) x_i B_{m-i, j-1}. Cells with
  // m - j > n - k cannot reach B_{n,k} (each step grows m at least as much
  // as j), so they are skipped; this also keeps every argument index below
  // the guaranteed n - k + 1.
  std::vector<std::vector<MultiPoly>> table(n + 1, std::vector<MultiPoly>(k + 1, MultiPoly(reg)));
  table[0][0] = MultiPoly::constant(reg, Rational(1));
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = 1; j <= k && j <= m; ++j) {
      if (m - j > n - k) continue;
      MultiPoly s(reg);
      for (unsigned i = 1; i + j <= m + 1; ++i)
        s += args[i - 1] * table[m - i][j - 1] * rat_binomial(m - 1, i - 1);
      table[m][j] = std::move(s);
    }
  }
  return table[n][k];
}

namespace {

void enumerate_partitions(unsigned next, unsigned n, unsigned k,
                          std::vector<unsigned>& block_sizes,
                          const std::vector<MultiPoly>& args, MultiPoly& acc) {
  if (next == n) {
    if (block_sizes.size() != k) return;
    MultiPoly term = MultiPoly::constant(acc.registry(), Rational(1));
    for (unsigned s : block_sizes) term *= args[s - 1];
    acc += term;
    return;
  }
  // place element `next` into an existing block or open a new one
  // (indices, not references: the recursion below may reallocate the vector)
  std::size_t existing = block_sizes.size();
  for (std::size_t b = 0; b < existing; ++b) {
    ++block_sizes[b];
    enumerate_partitions(next + 1, n, k, block_sizes, args, acc);
    --block_sizes[b];
  }
  if (block_sizes.size() < k) {
    block_sizes.push_back(1);
    enumerate_partitions(next + 1, n, k, block_sizes, args, acc);
    block_sizes.pop_back();
  }
}

}  // namespace

MultiPoly bell_oracle(unsigned n, unsigned k, const std::vector<MultiPoly>& args) {
  if (n > 10) throw std::out_of_range("bell_oracle enumeration is guarded to n <= 10");
  const auto& reg = args_registry(args);
  if (k > n) return MultiPoly(reg);
  if (n == 0) return MultiPoly::constant(reg, Rational(1));
  if (k == 0) return MultiPoly(reg);
  require_args(n, k, args);
  MultiPoly acc(reg);
  std::vector<unsigned> block_sizes;
  enumerate_partitions(0, n, k, block_sizes, args, acc);
  return acc;
}

}  // namespace appell
