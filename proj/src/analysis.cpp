#include "heapgames/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "heapgames/oracle.hpp"

namespace heapgames {

QTriple q_sequences(const GameParams& params, std::size_t len) {
  QTriple triple{params, {}, {}, {}, {}, {}};
  triple.q.reserve(len);

  // occ[v]: 0 unseen, 1 seen once, 2 done. A value repeats exactly once, at
  // the precomputed trigger index t*v + s*m of its first occurrence m.
  std::vector<unsigned char> occ(len + 2, 0);
  std::vector<u64> first_at(len + 2, 0), last_at(len + 2, 0);
  std::unordered_map<u64, u64> trigger;  // Q index -> value to repeat
  u64 next_mex = 0;

  for (u64 n = 0; n < len; ++n) {
    auto hit = trigger.find(n);
    if (hit != trigger.end()) {
      u64 v = hit->second;
      if (occ[v] != 1) throw std::logic_error("q_sequences: repeat trigger on a finished value");
      occ[v] = 2;
      last_at[v] = n;
      triple.q.push_back(v);
      triple.q2_indices.push_back(n);
      continue;
    }
    while (next_mex < occ.size() && occ[next_mex] != 0) ++next_mex;
    u64 v = next_mex;
    if (v >= occ.size()) throw std::logic_error("q_sequences: mex outside preallocated range");
    occ[v] = 1;
    first_at[v] = n;
    triple.q.push_back(v);
    triple.q1_indices.push_back(n);
    u128 trig = u128{params.t} * v + u128{params.s} * n;
    if (trig == n) {
      // exactly v = 0 at n = 0: its trigger is its own first occurrence, so
      // zero never repeats and counts as both a first and a last occurrence
      occ[v] = 2;
      last_at[v] = n;
      triple.q2_indices.push_back(n);
    } else if (trig <= ~u64{0}) {
      auto [it, inserted] = trigger.emplace(static_cast<u64>(trig), v);
      if (!inserted) throw std::logic_error("q_sequences: colliding repeat triggers");
    }
  }

  // Values first-occur in increasing order, so the defined prefixes are
  // contiguous from 0.
  for (u64 v = 0; v < occ.size() && occ[v] >= 1; ++v) triple.a_prime.push_back(first_at[v]);
  for (u64 v = 0; v < occ.size() && occ[v] == 2; ++v) triple.b_prime.push_back(last_at[v]);
  return triple;
}

Report check_lemma34(const QTriple& triple) {
  Report report{"lemma34", {}};

  bool ok = true;
  for (std::size_t i = 1; i < triple.q2_indices.size(); ++i) {
    if (triple.q2_indices[i] - triple.q2_indices[i - 1] < 2) {
      report.add_fail("q2_gaps_ge_2", "indices " + std::to_string(triple.q2_indices[i - 1]) +
                                          " and " + std::to_string(triple.q2_indices[i]));
      ok = false;
      break;
    }
  }
  if (ok) report.add_pass("q2_gaps_ge_2");

  ok = true;
  for (std::size_t i = 1; i < triple.q1_indices.size(); ++i) {
    if (triple.q1_indices[i] - triple.q1_indices[i - 1] > 2) {
      report.add_fail("q1_gaps_le_2", "indices " + std::to_string(triple.q1_indices[i - 1]) +
                                          " and " + std::to_string(triple.q1_indices[i]));
      ok = false;
      break;
    }
  }
  if (ok) report.add_pass("q1_gaps_le_2");

  ok = true;
  for (std::size_t v = 1; v < triple.a_prime.size(); ++v) {
    u64 d = triple.a_prime[v] - triple.a_prime[v - 1];
    if (d != 1 && d != 2) {
      report.add_fail("aprime_diffs_in_1_2",
                      "A'_" + std::to_string(v) + " - A'_" + std::to_string(v - 1) + " = " +
                          std::to_string(d));
      ok = false;
      break;
    }
  }
  if (ok) report.add_pass("aprime_diffs_in_1_2");
  return report;
}

namespace {

// Q indices reach B'_n = s*A_n + t*n <= (2s+t)*n, so this length defines
// both prefixes through n_max.
std::size_t q_len_for(const GameParams& params, u64 n_max) {
  return static_cast<std::size_t>((2 * params.s + params.t) * (n_max + 1) + 4);
}

}  // namespace

SequenceTable q_table(const GameParams& params, u64 n_max) {
  QTriple triple = q_sequences(params, q_len_for(params, n_max));
  if (triple.a_prime.size() <= n_max || triple.b_prime.size() <= n_max)
    throw std::logic_error("q_table: generated prefix too short");
  SequenceTable table{params, TableSource::QSequences, {}};
  for (u64 n = 0; n <= n_max; ++n)
    table.rows.push_back({n, triple.a_prime[n], triple.b_prime[n]});
  return table;
}

Report theorem4_equivalence(const GameParams& params, u64 n_max) {
  Report report{"theorem4", {}};
  SequenceTable from_q = q_table(params, n_max);
  SequenceTable from_mex = ab_by_mex(params, n_max);
  for (u64 n = 0; n <= n_max; ++n) {
    const TableRow& qa = from_q.rows[n];
    const TableRow& ab = from_mex.rows[n];
    if (qa.a != ab.a || qa.b != ab.b) {
      report.add_fail("aprime_bprime_equal_ab",
                      "n=" + std::to_string(n) + ": (A',B')=(" + std::to_string(qa.a) + "," +
                          std::to_string(qa.b) + ") vs (A,B)=(" + std::to_string(ab.a) + "," +
                          std::to_string(ab.b) + ")");
      return report;
    }
  }
  report.add_pass("aprime_bprime_equal_ab",
                  "n <= " + std::to_string(n_max) + " for s=" + std::to_string(params.s) +
                      ",t=" + std::to_string(params.t));
  return report;
}

SpectralBounds spectral_bounds(std::span<const u64> prefix) {
  if (prefix.size() < 2) throw std::invalid_argument("spectral bounds need a prefix of length >= 2");
  SpectralBounds out;
  out.prefix_len = prefix.size();
  bool first = true;
  for (std::size_t k = 1; k < prefix.size(); ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      i64 diff = static_cast<i64>(prefix[k] - prefix[k - i]);
      Rational lo{diff - 1, static_cast<i64>(i)};
      Rational hi{diff + 1, static_cast<i64>(i)};
      if (first) {
        out.lower = lo;
        out.upper = hi;
        first = false;
      } else {
        if (out.lower < lo) out.lower = lo;
        if (hi < out.upper) out.upper = hi;
      }
    }
  }
  return out;
}

SequenceTable beatty_table(u64 t, u64 n_max) {
  if (t < 1) throw std::invalid_argument("beatty_table requires t >= 1");
  SequenceTable table{GameParams{1, t}, TableSource::BeattyClosedForm, {}};
  table.rows.reserve(n_max + 1);
  // floor(n*alpha) for alpha = (2-t+sqrt(t^2+4))/2, exactly:
  // floor((n*(2-t) + isqrt(n^2*(t^2+4)))/2). The radicand is never a perfect
  // square, so the inner floor loses nothing.
  for (u64 n = 0; n <= n_max; ++n) {
    u128 radicand = u128{n} * n * (u128{t} * t + 4);
    i128 root = static_cast<i128>(isqrt(radicand));
    i128 m = static_cast<i128>(n) * (2 - static_cast<i128>(t)) + root;
    if (m < 0) throw std::logic_error("beatty_table: negative floor argument");
    if (m / 2 > static_cast<i128>(~u64{0})) throw std::overflow_error("beatty term exceeds 64 bits");
    u64 a = static_cast<u64>(m / 2);
    u64 b = checked_add(a, checked_mul(n, t));
    table.rows.push_back({n, a, b});
  }
  return table;
}

GapStats gap_statistics(const SequenceTable& table) {
  GapStats stats;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    stats.a_gaps[table.rows[i].a - table.rows[i - 1].a] += 1;
    stats.b_gaps[table.rows[i].b - table.rows[i - 1].b] += 1;
  }
  return stats;
}

double characteristic_root(const GameParams& params) {
  double r = static_cast<double>(params.r());
  double s = static_cast<double>(params.s);
  return (r + std::sqrt(r * r + 4.0 * s)) / 2.0;
}

QuasilinearityReport quasilinearity_experiment(const GameParams& params, u64 n_max, u64 i_max) {
  QuasilinearityReport rep;
  rep.params = params;
  rep.n_max = n_max;
  rep.i_max = i_max;
  rep.exploratory = params.s != params.t;
  if (i_max == 0 || n_max == 0) return rep;

  SequenceTable table = ab_by_mex(params, n_max + i_max);
  const auto& rows = table.rows;
  for (u64 i = 1; i <= i_max; ++i) {
    u64 min_d = ~u64{0}, max_d = 0, arg_min = 0, arg_max = 0;
    for (u64 n = 1; n <= n_max; ++n) {
      u64 d = rows[n + i].a - rows[n].a;
      if (d < min_d) {
        min_d = d;
        arg_min = n;
      }
      if (d > max_d) {
        max_d = d;
        arg_max = n;
      }
    }
    if (max_d - min_d > rep.max_spread) {
      rep.max_spread = max_d - min_d;
      rep.witness_i = i;
      rep.witness_n = arg_max;
      rep.witness_m = arg_min;
    }
  }
  return rep;
}

}  // namespace heapgames
