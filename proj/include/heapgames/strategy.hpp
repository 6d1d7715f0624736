#pragma once

#include <optional>

#include "heapgames/game.hpp"
#include "heapgames/sequence_table.hpp"

namespace heapgames {

enum class PN { P, N };

struct Verdict {
  PN kind = PN::N;
  std::optional<Move> witness;  // present iff N: a legal move into the P-set
};

// P/N verdict in O(digits of y): P iff (0,0), or x evil with
// y = value of the left shift of R(x). Requires x <= y.
PN classify_fast(const GameParams& params, const Position& pos);

// Canonical winning move (nullopt at a P-position). Requires x <= y.
std::optional<Move> winning_move_fast(const GameParams& params, const Position& pos);

// Same verdict and witness by direct lookup in a precomputed (A,B) table;
// throws TableTooSmallError if the table does not cover x.
Verdict classify_table(const GameParams& params, const Position& pos,
                       const SequenceTable& table);

}  // namespace heapgames
