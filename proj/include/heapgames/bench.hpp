#pragma once

#include <vector>

#include "heapgames/game.hpp"

namespace heapgames {

// Timing of classify_fast on seeded pseudo-random positions.
struct FastBenchResult {
  u64 queries = 0;
  u64 max_x = 0;
  double total_ms = 0;
  double max_query_ms = 0;
  double mean_digit_ops = 0;
  u64 p_count = 0;
};

// Timing of one table-method classification: build the mex table until it
// covers x, then look up. Time grows linearly in x, i.e. exponentially in
// the input length.
struct TableBenchPoint {
  u64 x = 0;
  double ms = 0;
  u64 rows = 0;
};

FastBenchResult bench_fast(const GameParams& params, u64 queries, u64 max_x, u64 seed);

// Each point is repeated until at least min_total_ms of work accumulates, so
// small sizes report a stable mean.
std::vector<TableBenchPoint> bench_table(const GameParams& params, const std::vector<u64>& xs,
                                         double min_total_ms = 20.0);

}  // namespace heapgames
