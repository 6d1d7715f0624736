#include "heapgames/strategy.hpp"

#include <algorithm>

#include "heapgames/numeration.hpp"

namespace heapgames {

namespace {

void expect_normalized(const Position& pos) {
  if (pos.x > pos.y) throw std::invalid_argument("position must be normalized (x <= y)");
}

// The synthesized move must land in the P-set; a failure here is a bug, not
// a caller error.
Move checked(const GameParams& params, const Position& from, const Move& mv) {
  Position to = apply_move(params, from, mv);
  if (!is_legal_move(params, from, to))
    throw std::logic_error("internal inconsistency: synthesized move is illegal");
  return mv;
}

}  // namespace

PN classify_fast(const GameParams& params, const Position& pos) {
  expect_normalized(pos);
  if (pos.x == 0) return pos.y == 0 ? PN::P : PN::N;
  Representation rx = represent(params, pos.x);
  if (tail_parity(rx) != TailParity::Evil) return PN::N;  // x = B_n, partner is below x
  return u128{pos.y} == shifted_value_wide(params, rx) ? PN::P : PN::N;
}

std::optional<Move> winning_move_fast(const GameParams& params, const Position& pos) {
  expect_normalized(pos);
  const u64 x = pos.x;
  const u64 y = pos.y;

  if (x == 0) {
    if (y == 0) return std::nullopt;  // P
    return checked(params, pos, Move::single(2, y));
  }

  Representation rx = represent(params, x);
  if (tail_parity(rx) == TailParity::Old) {
    // x = B_n: reduce y to A_n, read off by shifting the digits back down.
    u64 a_n = value(params, right_shift(rx));
    return checked(params, pos, Move::single(2, y - a_n));
  }

  // x = A_n with B_n the shifted value.
  u128 b_n = shifted_value_wide(params, rx);
  if (u128{y} == b_n) return std::nullopt;  // P
  if (u128{y} > b_n) return checked(params, pos, Move::single(2, y - static_cast<u64>(b_n)));
  if (u128{y} < u128{params.s} * x + params.t) return checked(params, pos, Move::both(x, y));

  // A_n <= s*x + t <= y < B_n: drop to (A_m, B_m) with m = floor((y - s*x)/t).
  u64 m = (y - static_cast<u64>(u128{params.s} * x)) / params.t;
  u64 a_m = select_evil(params, m);
  u64 b_m = static_cast<u64>(u128{params.s} * a_m + u128{params.t} * m);
  return checked(params, pos, Move::both(x - a_m, y - b_m));
}

Verdict classify_table(const GameParams& params, const Position& pos, const SequenceTable& table) {
  expect_normalized(pos);
  const auto& rows = table.rows;
  if (rows.empty() || rows[0].a != 0)
    throw TableTooSmallError("table must start at row (0,0,0)");

  const u64 x = pos.x;
  const u64 y = pos.y;
  if (x == 0 && y == 0) return {PN::P, std::nullopt};
  if (x == 0) return {PN::N, checked(params, pos, Move::single(2, y))};
  if (x > rows.back().a)
    throw TableTooSmallError("table covers values up to " + std::to_string(rows.back().a) +
                             ", got x = " + std::to_string(x));

  auto a_it = std::lower_bound(rows.begin(), rows.end(), x,
                               [](const TableRow& row, u64 v) { return row.a < v; });
  if (a_it != rows.end() && a_it->a == x) {
    u64 b_n = a_it->b;
    if (y == b_n) return {PN::P, std::nullopt};
    if (y > b_n) return {PN::N, checked(params, pos, Move::single(2, y - b_n))};
    if (u128{y} < u128{params.s} * x + params.t)
      return {PN::N, checked(params, pos, Move::both(x, y))};
    u64 m = (y - static_cast<u64>(u128{params.s} * x)) / params.t;
    const TableRow& target = rows[m];
    return {PN::N, checked(params, pos, Move::both(x - target.a, y - target.b))};
  }

  auto b_it = std::lower_bound(rows.begin(), rows.end(), x,
                               [](const TableRow& row, u64 v) { return row.b < v; });
  if (b_it == rows.end() || b_it->b != x)
    throw std::logic_error("complementarity violated: x in neither column");
  return {PN::N, checked(params, pos, Move::single(2, y - b_it->a))};
}

}  // namespace heapgames
