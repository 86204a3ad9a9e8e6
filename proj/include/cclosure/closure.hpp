#pragma once

#include <cstddef>
#include <string>

#include "cclosure/dfa.hpp"
#include "cclosure/resimple.hpp"

namespace cclosure {

inline constexpr std::size_t kDefaultMaxStates = 5'000'000;

// Grid product of one counter per coordinate (see ResimpleSystem::axes);
// a grid state is final when its membership class is good. Accepts
// {w : member_system(φ(w))}.
Dfa build_closure_dfa(const ResimpleSystem& system, const std::string& alphabet,
                      std::size_t max_states = kDefaultMaxStates);

// Shuffle product of the per-coordinate counters of S_h; has exactly
// Π_j (d_j + p_j) states, with p_j = 2 for coordinates outside J.
Dfa build_term_dfa(const ResimpleSystem& system, std::size_t h, const std::string& alphabet);

// Union over good classes H of ∩_{h∈H} A_h ∩ ∩_{h∉H} ¬A_h, minimized.
Dfa build_closure_dfa_boolean(const ResimpleSystem& system, const std::string& alphabet);

}  // namespace cclosure
