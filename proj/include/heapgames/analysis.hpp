#pragma once

#include <map>
#include <span>
#include <vector>

#include "heapgames/rational.hpp"
#include "heapgames/report.hpp"
#include "heapgames/sequence_table.hpp"

namespace heapgames {

// The Q / A' / B' construction: Q_n repeats an earlier value Q_m when
// n = t*Q_m + s*m and that value has occurred exactly once; otherwise Q_n is
// the mex of everything seen. A'_v / B'_v are the first / last indices where
// v occurs; q1/q2 are the corresponding index subsequences.
struct QTriple {
  GameParams params;
  std::vector<u64> q;
  std::vector<u64> a_prime;     // indexed by value, defined prefix only
  std::vector<u64> b_prime;     // indexed by value, defined prefix only
  std::vector<u64> q1_indices;  // first occurrences, ascending
  std::vector<u64> q2_indices;  // last occurrences, ascending
};

// Prefix test for membership in a spectrum floor(n*alpha + gamma):
// lower = max (a_k - a_{k-i} - 1)/i, upper = min (a_k - a_{k-i} + 1)/i.
// A prefix of a spectrum always satisfies lower < upper.
struct SpectralBounds {
  Rational lower;
  Rational upper;
  std::size_t prefix_len = 0;

  bool spectral_candidate() const { return lower < upper; }
};

struct GapStats {
  std::map<u64, u64> a_gaps;  // distinct consecutive A differences -> count
  std::map<u64, u64> b_gaps;
};

struct QuasilinearityReport {
  GameParams params;
  u64 n_max = 0;
  u64 i_max = 0;
  u64 max_spread = 0;  // max |(A_{n+i}-A_n) - (A_{m+i}-A_m)|
  u64 witness_i = 0;
  u64 witness_n = 0;
  u64 witness_m = 0;
  bool exploratory = false;  // s != t: outside the conjectured subfamily
};

// Q_0..Q_{len-1} with derived A', B', q1, q2.
QTriple q_sequences(const GameParams& params, std::size_t len);

// Consecutive q2 index gaps >= 2, q1 gaps <= 2, A' differences in {1,2}.
Report check_lemma34(const QTriple& triple);

// Elementwise A'_n = A_n and B'_n = B_n against the mex recurrence,
// n = 0..n_max.
Report theorem4_equivalence(const GameParams& params, u64 n_max);

// Rows (n, A'_n, B'_n) as a SequenceTable.
SequenceTable q_table(const GameParams& params, u64 n_max);

// Exact rational spectral bounds of a nondecreasing prefix (length >= 2).
SpectralBounds spectral_bounds(std::span<const u64> prefix);

// s = 1 closed form: rows (n, floor(n*alpha), floor(n*beta)) with
// alpha = (2 - t + sqrt(t^2+4))/2, beta = alpha + t, floors taken exactly
// through an integer square root.
SequenceTable beatty_table(u64 t, u64 n_max);

GapStats gap_statistics(const SequenceTable& table);

// Sweep of second-difference discrepancies of the A column; reported, never
// asserted (the bound <= s for s = t is conjectural).
QuasilinearityReport quasilinearity_experiment(const GameParams& params, u64 n_max, u64 i_max);

// Dominant root of x^2 = (s+t-1)x + s, the growth rate of the bases. The
// subdominant root lies in (-1,0), so u_{n+1}/u_n converges to this
// geometrically; diagnostic only, the engine never works in floating point.
double characteristic_root(const GameParams& params);

}  // namespace heapgames
