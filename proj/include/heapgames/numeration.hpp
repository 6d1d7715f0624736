#pragma once

#include <string>
#include <vector>

#include "heapgames/sequence_table.hpp"

namespace heapgames {

// Numeration system for fixed (s,t): bases u_0 = 1, u_1 = s+t,
// u_n = (s+t-1)*u_{n-1} + s*u_{n-2}, digits d_i in {0..r} with the coupling
// rule d_{i+1} = r  =>  d_i <= q. Every nonnegative integer has exactly one
// representation; the greedy algorithm finds it.
struct Bases {
  GameParams params;
  std::vector<u64> u;
};

// Little-endian digit vector: digits[i] multiplies u_i. Canonical form has a
// nonzero top digit; zero is the empty vector.
struct Representation {
  std::vector<u64> digits;

  bool is_zero() const { return digits.empty(); }
  bool operator==(const Representation&) const = default;
};

enum class TailParity { Evil, Old, ZeroBoth };

const char* to_string(TailParity p);

// All bases <= limit plus one witness base beyond it.
Bases bases_up_to(const GameParams& params, u64 limit);

// Greedy representation of m; satisfies every digit invariant.
Representation represent(const GameParams& params, u64 m);

// Sum of digits[i]*u_i. Digit-range precondition only; the coupling rule is
// not required here (see validate).
u64 value(const GameParams& params, const Representation& rep);

// value of the left shift (digits moved one base up) without materializing it.
u64 shifted_value(const GameParams& params, const Representation& rep);

// 128-bit variant: the shifted value of an in-contract input can spill past
// 64 bits, and comparisons against it must still be exact.
u128 shifted_value_wide(const GameParams& params, const Representation& rep);

// Range, coupling rule, and canonicity.
bool validate(const GameParams& params, const Representation& rep);

// Digits moved one base upward; maps R(A_n) to R(B_n).
Representation left_shift(const Representation& rep);

// Inverse of left_shift; requires at least one trailing zero digit.
Representation right_shift(const Representation& rep);

// Evil = even number of trailing zero digits, Old = odd; 0 is both.
TailParity tail_parity(const Representation& rep);

// Representation of m+1 by constant-amortized digit surgery on the tail;
// agrees with represent(m+1).
Representation increment(const GameParams& params, const Representation& rep);

// Count of evil integers v with 1 <= v <= x, by digit DP over R(x).
// Equals the n with A_n <= x < A_{n+1}.
u64 rank_evil(const GameParams& params, u64 x);

// The n-th evil number V_n (V_0 = 0); equals A_n.
u64 select_evil(const GameParams& params, u64 n);

// Rows (k, V_k, W_k): V_k the k-th evil number, W_k the value of the left
// shift of R(V_k). Coincides with the mex table.
SequenceTable evil_old_pairs(const GameParams& params, u64 n_max);

// Big-endian digit string; digits joined by '.' when r > 9.
std::string render_digits(const GameParams& params, const Representation& rep);
Representation parse_digits(const GameParams& params, const std::string& text);

// Instrumentation: per-thread counter of digit positions touched by the
// operations above. The strategy's complexity witness reads this.
u64 digit_ops();
void reset_digit_ops();

}  // namespace heapgames
