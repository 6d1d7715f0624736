#include "heapgames/game.hpp"

#include <algorithm>
#include <set>

namespace heapgames {

std::string to_string(const Move& mv) {
  if (mv.kind == Move::Kind::SingleHeap)
    return "take " + std::to_string(mv.take) + " from heap " + std::to_string(mv.heap);
  return "take " + std::to_string(mv.k) + " and " + std::to_string(mv.l);
}

Position normalize(const Position& pos) {
  if (pos.x <= pos.y) return pos;
  return {pos.y, pos.x};
}

namespace {

// 0 < k <= l < s*k + t after sorting the two amounts.
bool both_amounts_ok(const GameParams& params, u64 a, u64 b) {
  u64 k = std::min(a, b);
  u64 l = std::max(a, b);
  if (k == 0) return false;
  return u128{l} < u128{params.s} * k + params.t;
}

}  // namespace

Position apply_move(const GameParams& params, const Position& pos, const Move& mv) {
  if (mv.kind == Move::Kind::SingleHeap) {
    if (mv.take == 0) throw IllegalMoveError("single-heap move must take at least one token");
    if (mv.heap != 1 && mv.heap != 2) throw IllegalMoveError("heap index must be 1 or 2");
    u64 have = mv.heap == 1 ? pos.x : pos.y;
    if (mv.take > have)
      throw IllegalMoveError("take of " + std::to_string(mv.take) + " exceeds heap of " +
                             std::to_string(have));
    return mv.heap == 1 ? Position{pos.x - mv.take, pos.y} : Position{pos.x, pos.y - mv.take};
  }

  if (mv.k == 0 || mv.l == 0) throw IllegalMoveError("both-heaps move must take from both heaps");
  if (mv.k > mv.l) throw IllegalMoveError("both-heaps move requires k <= l");
  if (!both_amounts_ok(params, mv.k, mv.l))
    throw IllegalMoveError("both-heaps move needs l < s*k + t: " + std::to_string(mv.l) +
                           " >= " + std::to_string(params.s) + "*" + std::to_string(mv.k) + "+" +
                           std::to_string(params.t));
  if (mv.k <= pos.x && mv.l <= pos.y) return {pos.x - mv.k, pos.y - mv.l};
  if (mv.l <= pos.x && mv.k <= pos.y) return {pos.x - mv.l, pos.y - mv.k};
  throw IllegalMoveError("amounts " + std::to_string(mv.k) + "," + std::to_string(mv.l) +
                         " exceed heaps " + std::to_string(pos.x) + "," + std::to_string(pos.y));
}

bool is_legal_move(const GameParams& params, const Position& from, const Position& to) {
  Position f = normalize(from);
  Position g = normalize(to);
  if (f == g) return false;

  // Move I on the unordered pair: one heap preserved, the other shrunk.
  if (g.x == f.x && g.y < f.y) return true;   // larger heap reduced, still >= x
  if (g.y == f.y && g.x < f.x) return true;   // smaller heap reduced
  if (g.y == f.x && g.x < f.y) return true;   // larger heap reduced below the smaller

  // Move II: both heaps shrink; either assignment of the amounts.
  if (g.x < f.x && g.y < f.y && both_amounts_ok(params, f.x - g.x, f.y - g.y)) return true;
  if (g.y < f.x && g.x < f.y && both_amounts_ok(params, f.x - g.y, f.y - g.x)) return true;
  return false;
}

std::vector<Position> legal_successors(const GameParams& params, const Position& pos,
                                       u64 total_cap) {
  Position p = normalize(pos);
  if (p.x + p.y > total_cap)
    throw ResourceLimitError("legal_successors: x+y = " + std::to_string(p.x + p.y) +
                             " exceeds cap " + std::to_string(total_cap));

  std::set<Position> out;
  for (u64 take = 1; take <= p.x; ++take) out.insert(normalize({p.x - take, p.y}));
  for (u64 take = 1; take <= p.y; ++take) out.insert(normalize({p.x, p.y - take}));
  for (u64 a = 1; a <= p.x; ++a)
    for (u64 b = 1; b <= p.y; ++b)
      if (both_amounts_ok(params, a, b)) out.insert(normalize({p.x - a, p.y - b}));
  return {out.begin(), out.end()};
}

}  // namespace heapgames
