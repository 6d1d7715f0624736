#pragma once

#include <string>
#include <vector>

#include "heapgames/common.hpp"

namespace heapgames {

// The (s,t) family of two-heap take-away games. Move I removes any positive
// number of tokens from one heap; move II removes k from one heap and l
// from the other subject to 0 < k <= l < s*k + t.
struct GameParams {
  u64 s = 1;
  u64 t = 1;

  GameParams() = default;  // Wythoff's game
  GameParams(u64 s_, u64 t_) : s(s_), t(t_) {
    if (s < 1 || t < 1) throw std::invalid_argument("game parameters require s >= 1 and t >= 1");
  }

  // Largest digit value of the associated numeration system.
  u64 r() const { return s + t - 1; }
  // Digit bound forced below an r digit.
  u64 q() const { return s - 1; }

  bool operator==(const GameParams&) const = default;
};

struct Position {
  u64 x = 0;
  u64 y = 0;

  bool operator==(const Position&) const = default;
  auto operator<=>(const Position&) const = default;
};

struct Move {
  enum class Kind { SingleHeap, BothHeaps };

  Kind kind = Kind::SingleHeap;
  int heap = 1;   // SingleHeap: 1 acts on x, 2 acts on y
  u64 take = 0;   // SingleHeap amount
  u64 k = 0;      // BothHeaps smaller amount
  u64 l = 0;      // BothHeaps larger amount

  static Move single(int heap, u64 take) {
    Move m;
    m.kind = Kind::SingleHeap;
    m.heap = heap;
    m.take = take;
    return m;
  }

  static Move both(u64 k, u64 l) {
    Move m;
    m.kind = Kind::BothHeaps;
    m.k = k;
    m.l = l;
    return m;
  }

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& mv);

// Canonical form: heaps sorted so x <= y.
Position normalize(const Position& pos);

// Applies mv to pos, throwing IllegalMoveError with the violated constraint.
// BothHeaps amounts may land on either heap; the assignment (k from x,
// l from y) is preferred when both fit.
Position apply_move(const GameParams& params, const Position& pos, const Move& mv);

// True iff `to` is reachable from `from` in exactly one legal move, heaps
// taken as an unordered pair.
bool is_legal_move(const GameParams& params, const Position& from, const Position& to);

// Complete duplicate-free list of normalized one-move successors, sorted.
// Enumeration is quadratic in x+y, so inputs above the cap are refused.
std::vector<Position> legal_successors(const GameParams& params, const Position& pos,
                                       u64 total_cap = 10000);

}  // namespace heapgames
