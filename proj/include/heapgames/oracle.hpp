#pragma once

#include <vector>

#include "heapgames/sequence_table.hpp"

namespace heapgames {

// A_n = mex{A_i, B_i : i < n}, B_n = s*A_n + t*n, rows 0..n_max.
SequenceTable ab_by_mex(const GameParams& params, u64 n_max, u64 n_cap = 10'000'000);

// Extends the mex recurrence until the A column reaches `value`, so every
// integer up to A_N is accounted for by the table.
SequenceTable ab_covering(const GameParams& params, u64 value, u64 n_cap = 100'000'000);

// Exact P-position set {(x,y) : x <= y <= bound}, by backward induction on
// x+y directly from the move rules. Exponential in the input length.
std::vector<Position> p_positions_retrograde(const GameParams& params, u64 bound,
                                             u64 bound_cap = 300);

}  // namespace heapgames
