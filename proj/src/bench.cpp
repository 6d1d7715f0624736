#include "heapgames/bench.hpp"

#include <chrono>
#include <random>

#include "heapgames/numeration.hpp"
#include "heapgames/oracle.hpp"
#include "heapgames/strategy.hpp"

namespace heapgames {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

FastBenchResult bench_fast(const GameParams& params, u64 queries, u64 max_x, u64 seed) {
  FastBenchResult res;
  res.queries = queries;
  res.max_x = max_x;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(0, max_x);

  // warm the base cache so the first query is not an outlier
  (void)classify_fast(params, normalize({max_x, max_x}));

  reset_digit_ops();
  auto batch_start = std::chrono::steady_clock::now();
  for (u64 i = 0; i < queries; ++i) {
    Position pos = normalize({dist(rng), dist(rng)});
    auto q0 = std::chrono::steady_clock::now();
    if (classify_fast(params, pos) == PN::P) ++res.p_count;
    double q_ms = ms_since(q0);
    if (q_ms > res.max_query_ms) res.max_query_ms = q_ms;
  }
  res.total_ms = ms_since(batch_start);
  res.mean_digit_ops = queries ? static_cast<double>(digit_ops()) / queries : 0.0;
  return res;
}

std::vector<TableBenchPoint> bench_table(const GameParams& params, const std::vector<u64>& xs,
                                         double min_total_ms) {
  std::vector<TableBenchPoint> points;
  for (u64 x : xs) {
    TableBenchPoint p;
    p.x = x;
    double total = 0;
    u64 reps = 0;
    // repeat until enough work accumulates for a stable mean
    while (total < min_total_ms || reps < 3) {
      auto t0 = std::chrono::steady_clock::now();
      SequenceTable table = ab_covering(params, x);
      Position probe = normalize({x, table.rows.back().b});
      (void)classify_table(params, probe, table);
      total += ms_since(t0);
      p.rows = table.rows.size();
      ++reps;
      if (reps > 10000) break;
    }
    p.ms = total / static_cast<double>(reps);
    points.push_back(p);
  }
  return points;
}

}  // namespace heapgames
