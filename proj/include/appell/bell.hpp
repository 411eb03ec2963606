#pragma once

#include <vector>

#include "appell/multipoly.hpp"

namespace appell {

// Partial Bell polynomial B_{n,k}(args[0], args[1], ...), args[j] playing
// x_{j+1}. Returns 0 when k > n. For k <= n the first n-k+1 arguments must
// be present (std::invalid_argument otherwise); later entries are never read.
MultiPoly bell_partial(unsigned n, unsigned k, const std::vector<MultiPoly>& args);

// Independent oracle: direct enumeration of set partitions of an n-set into
// k blocks. Guarded to n <= 10 (std::out_of_range beyond).
MultiPoly bell_oracle(unsigned n, unsigned k, const std::vector<MultiPoly>& args);

}  // namespace appell
