#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "heapgames/game.hpp"

namespace heapgames {

// One human-vs-engine game. Heaps are named A and B; the human moves first.
// Input grammar: "take N from A", "take N from B", "take K L" (K off A, L
// off B), "quit". Illegal or malformed input leaves the state unchanged.
class PlaySession {
 public:
  struct StepResult {
    bool accepted = false;  // human move applied
    bool game_over = false;
    bool quit = false;
    std::string text;                      // everything to show the human
    std::optional<Position> human_target;  // state after the human move
    std::optional<Position> engine_target;
  };

  PlaySession(const GameParams& params, const Position& start);

  StepResult step(const std::string& line);

  const Position& heaps() const { return heaps_; }
  bool game_over() const { return over_; }
  std::string status_line() const;

 private:
  GameParams params_;
  Position heaps_;  // raw (A,B), not normalized
  bool over_ = false;

  std::string engine_reply();

  friend struct PlaySessionTestAccess;
};

// Terminal loop around PlaySession; returns the process exit status.
int run_play_session(const GameParams& params, const Position& start, std::istream& in,
                     std::ostream& out);

}  // namespace heapgames
