#include "heapgames/oracle.hpp"

#include <set>
#include <string>

namespace heapgames {

namespace {

struct MexBuilder {
  const GameParams& params;
  std::vector<char> taken;  // occupancy of values already used by A or B
  u64 next_mex = 0;
  SequenceTable table;

  explicit MexBuilder(const GameParams& p) : params(p), table{p, TableSource::MexRecurrence, {}} {}

  void mark(u64 v) {
    if (v >= taken.size()) taken.resize(std::max<std::size_t>(v + 1, taken.size() * 2 + 64), 0);
    taken[v] = 1;
  }

  void push_row() {
    u64 n = table.rows.size();
    while (next_mex < taken.size() && taken[next_mex]) ++next_mex;
    u64 a = next_mex;
    u128 b_wide = u128{params.s} * a + u128{params.t} * n;
    if (b_wide > ~u64{0}) throw std::overflow_error("B_n exceeds 64 bits");
    u64 b = static_cast<u64>(b_wide);
    mark(a);
    mark(b);
    table.rows.push_back({n, a, b});
  }
};

}  // namespace

SequenceTable ab_by_mex(const GameParams& params, u64 n_max, u64 n_cap) {
  if (n_max > n_cap)
    throw ResourceLimitError("ab_by_mex: n_max " + std::to_string(n_max) + " exceeds cap " +
                             std::to_string(n_cap));
  MexBuilder builder(params);
  builder.taken.reserve((2 * params.s + params.t) * (n_max + 1) + 2);
  for (u64 n = 0; n <= n_max; ++n) builder.push_row();
  return std::move(builder.table);
}

SequenceTable ab_covering(const GameParams& params, u64 value, u64 n_cap) {
  MexBuilder builder(params);
  builder.push_row();
  while (builder.table.rows.back().a < value) {
    if (builder.table.rows.size() > n_cap)
      throw ResourceLimitError("ab_covering: row cap " + std::to_string(n_cap) +
                               " reached before covering " + std::to_string(value));
    builder.push_row();
  }
  return std::move(builder.table);
}

std::vector<Position> p_positions_retrograde(const GameParams& params, u64 bound, u64 bound_cap) {
  if (bound > bound_cap)
    throw ResourceLimitError("p_positions_retrograde: bound " + std::to_string(bound) +
                             " exceeds cap " + std::to_string(bound_cap));

  // By increasing total, every move strictly shrinks x+y, so a position is P
  // exactly when no legal move reaches an already-labeled P-position.
  std::vector<Position> p_set;
  for (u64 total = 0; total <= 2 * bound; ++total) {
    u64 x_lo = total > bound ? total - bound : 0;
    for (u64 x = x_lo; 2 * x <= total; ++x) {
      Position pos{x, total - x};
      bool reaches_p = false;
      for (const Position& p : p_set) {
        if (is_legal_move(params, pos, p)) {
          reaches_p = true;
          break;
        }
      }
      if (!reaches_p) p_set.push_back(pos);
    }
  }
  std::set<Position> sorted(p_set.begin(), p_set.end());
  return {sorted.begin(), sorted.end()};
}

}  // namespace heapgames
