#include "heapgames/play.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "heapgames/strategy.hpp"

namespace heapgames {

namespace {

struct ParsedMove {
  enum class What { Single, Both, Quit, Bad } what = What::Bad;
  char heap = 'A';
  u64 n = 0;  // single take
  u64 ka = 0, lb = 0;  // both-heaps: off A, off B
  std::string error;
};

bool read_u64(std::istringstream& in, u64& out) {
  std::string tok;
  if (!(in >> tok)) return false;
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

ParsedMove parse_line(const std::string& line) {
  ParsedMove mv;
  std::istringstream in(line);
  std::string word;
  if (!(in >> word)) {
    mv.error = "empty input";
    return mv;
  }
  if (word == "quit" || word == "q") {
    mv.what = ParsedMove::What::Quit;
    return mv;
  }
  if (word != "take") {
    mv.error = "expected 'take N from A|B', 'take K L', or 'quit'";
    return mv;
  }
  u64 first = 0;
  if (!read_u64(in, first)) {
    mv.error = "expected a number after 'take'";
    return mv;
  }
  std::string next;
  if (!(in >> next)) {
    mv.error = "expected 'from A|B' or a second number";
    return mv;
  }
  if (next == "from") {
    std::string heap;
    if (!(in >> heap) || (heap != "A" && heap != "B" && heap != "a" && heap != "b")) {
      mv.error = "heap must be A or B";
      return mv;
    }
    mv.what = ParsedMove::What::Single;
    mv.heap = (heap == "A" || heap == "a") ? 'A' : 'B';
    mv.n = first;
    return mv;
  }
  if (next.find_first_not_of("0123456789") != std::string::npos) {
    mv.error = "expected 'from A|B' or a second number";
    return mv;
  }
  mv.what = ParsedMove::What::Both;
  mv.ka = first;
  mv.lb = std::stoull(next);
  return mv;
}

}  // namespace

PlaySession::PlaySession(const GameParams& params, const Position& start)
    : params_(params), heaps_(start) {
  over_ = heaps_.x == 0 && heaps_.y == 0;
}

std::string PlaySession::status_line() const {
  return "Heaps: A=" + std::to_string(heaps_.x) + " B=" + std::to_string(heaps_.y);
}

std::string PlaySession::engine_reply() {
  // strategy wants x <= y; map its heap indices back onto A/B
  bool a_is_small = heaps_.x <= heaps_.y;
  Position norm = normalize(heaps_);
  auto mv = winning_move_fast(params_, norm);
  std::string text;
  if (!mv) {
    // losing position for the engine: stall by one token off the larger heap
    u64 take = 1;
    if (a_is_small) {
      heaps_.y -= take;
      text = "engine takes 1 from B";
    } else {
      heaps_.x -= take;
      text = "engine takes 1 from A";
    }
  } else if (mv->kind == Move::Kind::SingleHeap) {
    // canonical single-heap moves always act on the larger heap
    if (a_is_small) {
      heaps_.y -= mv->take;
      text = "engine takes " + std::to_string(mv->take) + " from B";
    } else {
      heaps_.x -= mv->take;
      text = "engine takes " + std::to_string(mv->take) + " from A";
    }
  } else {
    u64 off_a = a_is_small ? mv->k : mv->l;
    u64 off_b = a_is_small ? mv->l : mv->k;
    heaps_.x -= off_a;
    heaps_.y -= off_b;
    text = "engine takes " + std::to_string(off_a) + " from A and " + std::to_string(off_b) +
           " from B";
  }
  if (heaps_.x == 0 && heaps_.y == 0) {
    over_ = true;
    text += "\nEngine wins.";
  }
  return text;
}

PlaySession::StepResult PlaySession::step(const std::string& line) {
  StepResult res;
  if (over_) {
    res.game_over = true;
    res.text = "game is over";
    return res;
  }

  ParsedMove mv = parse_line(line);
  switch (mv.what) {
    case ParsedMove::What::Quit:
      res.quit = true;
      res.text = "bye";
      return res;
    case ParsedMove::What::Bad:
      res.text = "could not parse move: " + mv.error;
      return res;
    case ParsedMove::What::Single: {
      u64 have = mv.heap == 'A' ? heaps_.x : heaps_.y;
      if (mv.n == 0) {
        res.text = "illegal move: must take at least one token";
        return res;
      }
      if (mv.n > have) {
        res.text = "illegal move: heap " + std::string(1, mv.heap) + " has only " +
                   std::to_string(have) + " tokens";
        return res;
      }
      Position target = mv.heap == 'A' ? Position{heaps_.x - mv.n, heaps_.y}
                                       : Position{heaps_.x, heaps_.y - mv.n};
      if (!is_legal_move(params_, heaps_, target)) {
        res.text = "illegal move";
        return res;
      }
      heaps_ = target;
      break;
    }
    case ParsedMove::What::Both: {
      if (mv.ka == 0 || mv.lb == 0) {
        res.text = "illegal move: a both-heaps move must take from both heaps";
        return res;
      }
      if (mv.ka > heaps_.x || mv.lb > heaps_.y) {
        res.text = "illegal move: amounts exceed the heaps";
        return res;
      }
      u64 k = std::min(mv.ka, mv.lb), l = std::max(mv.ka, mv.lb);
      if (u128{l} >= u128{params_.s} * k + params_.t) {
        res.text = "illegal move: need max(k,l) < " + std::to_string(params_.s) + "*min(k,l)+" +
                   std::to_string(params_.t) + ", got " + std::to_string(l) + " vs " +
                   std::to_string(params_.s * k + params_.t);
        return res;
      }
      Position target{heaps_.x - mv.ka, heaps_.y - mv.lb};
      if (!is_legal_move(params_, heaps_, target)) {
        res.text = "illegal move";
        return res;
      }
      heaps_ = target;
      break;
    }
  }

  res.accepted = true;
  res.human_target = heaps_;
  if (heaps_.x == 0 && heaps_.y == 0) {
    over_ = true;
    res.game_over = true;
    res.text = "You win!";
    return res;
  }
  res.text = engine_reply();
  res.engine_target = heaps_;
  res.game_over = over_;
  return res;
}

int run_play_session(const GameParams& params, const Position& start, std::istream& in,
                     std::ostream& out) {
  PlaySession session(params, start);
  out << "two-heap game, s=" << params.s << " t=" << params.t << "\n";
  out << "moves: 'take N from A|B', 'take K L' (K off A, L off B), 'quit'\n";
  out << session.status_line() << "\n";
  std::string line;
  while (!session.game_over()) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    auto res = session.step(line);
    out << res.text << "\n";
    if (res.quit) return 0;
    if (!session.game_over()) out << session.status_line() << "\n";
  }
  return 0;
}

}  // namespace heapgames
