#pragma once

// Minimal nonnegative solutions of homogeneous linear Diophantine systems
// A y = 0, by the completion procedure of Contejean and Devie.

#include <cstddef>
#include <vector>

#include "cclosure/int_math.hpp"

namespace cclosure {

struct SolverLimits {
  std::size_t max_frontier = 200'000;   // candidates alive in one round
  std::size_t max_rounds = 10'000;      // total degree of explored vectors
  std::size_t max_solutions = 100'000;
};

// `columns[i]` is A e_i; every column has the same length (number of
// equations). Variables listed in `unit_bounded` are restricted to {0, 1}.
// Returns every nonzero y in N^n with A y = 0 that is minimal for the
// componentwise order among such y. If `stop_when` names a variable, the
// search stops at the first solution where that variable is nonzero.
std::vector<IntVector> minimal_solutions(const std::vector<IntVector>& columns,
                                         const std::vector<std::size_t>& unit_bounded = {},
                                         const SolverLimits& limits = {},
                                         std::ptrdiff_t stop_when = -1);

}  // namespace cclosure
