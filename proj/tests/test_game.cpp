#include "heapgames/game.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace heapgames;

TEST_CASE("normalize orders the pair") {
  CHECK(normalize({9, 4}) == Position{4, 9});
  CHECK(normalize({0, 0}) == Position{0, 0});
  CHECK(normalize({5, 5}) == Position{5, 5});
}

TEST_CASE("game params validate and derive q, r") {
  GameParams p{2, 2};
  CHECK(p.q() == 1);
  CHECK(p.r() == 3);
  CHECK(GameParams{3, 1}.q() == 2);
  CHECK(GameParams{3, 1}.r() == 3);
  CHECK_THROWS_AS(GameParams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(GameParams(1, 0), std::invalid_argument);
}

TEST_CASE("apply_move on both heaps within the constraint") {
  GameParams p{2, 2};
  CHECK(apply_move(p, {5, 15}, Move::both(3, 7)) == Position{2, 8});
  CHECK(apply_move(p, {5, 30}, Move::single(2, 12)) == Position{5, 18});
  CHECK_THROWS_AS(apply_move(p, {5, 15}, Move::both(1, 5)), IllegalMoveError);  // 5 >= 2*1+2
  CHECK_THROWS_AS(apply_move(p, {5, 15}, Move::single(1, 0)), IllegalMoveError);
  CHECK_THROWS_AS(apply_move(p, {5, 15}, Move::single(1, 6)), IllegalMoveError);
  CHECK_THROWS_AS(apply_move(p, {5, 15}, Move::both(7, 3)), IllegalMoveError);  // k > l
}

TEST_CASE("both-heaps amounts can land on either heap") {
  GameParams p{2, 2};
  CHECK(apply_move(p, {4, 5}, Move::both(4, 5)) == Position{0, 0});
  // 7 does not fit on the second heap, so the amounts swap
  CHECK(apply_move(p, {15, 5}, Move::both(3, 7)) == Position{8, 2});
}

TEST_CASE("is_legal_move examples") {
  CHECK(is_legal_move({2, 2}, {5, 15}, {2, 8}));
  CHECK_FALSE(is_legal_move({2, 2}, {5, 15}, {5, 15}));
  CHECK_FALSE(is_legal_move({1, 1}, {3, 5}, {1, 2}));  // k=2,l=3 needs 3 < 1*2+1
}

TEST_CASE("move legality is symmetric under heap swap") {
  GameParams p{3, 2};
  for (u64 a = 0; a <= 12; ++a)
    for (u64 b = a; b <= 12; ++b)
      for (u64 c = 0; c <= 12; ++c)
        for (u64 d = 0; d <= 12; ++d) {
          bool fwd = is_legal_move(p, {a, b}, {c, d});
          CHECK(fwd == is_legal_move(p, {b, a}, {c, d}));
          CHECK(fwd == is_legal_move(p, {a, b}, {d, c}));
        }
}

TEST_CASE("legal_successors small positions") {
  GameParams p{2, 2};
  CHECK(legal_successors(p, {0, 0}).empty());
  CHECK(legal_successors(p, {1, 1}) == std::vector<Position>{{0, 0}, {0, 1}});

  auto from_1_4 = legal_successors(p, {1, 4});
  CHECK(std::find(from_1_4.begin(), from_1_4.end(), Position{0, 0}) == from_1_4.end());
}

TEST_CASE("legal_successors matches is_legal_move exhaustively") {
  GameParams p{2, 3};
  for (u64 x = 0; x <= 9; ++x) {
    for (u64 y = x; x + y <= 60 && y <= 60 - x; ++y) {
      auto successors = legal_successors(p, {x, y});
      std::set<Position> succ_set(successors.begin(), successors.end());
      CHECK(succ_set.size() == successors.size());
      for (u64 c = 0; c <= y; ++c)
        for (u64 d = c; d <= y; ++d) {
          bool in_list = succ_set.count({c, d}) != 0;
          CHECK(in_list == is_legal_move(p, {x, y}, {c, d}));
        }
    }
  }
}

TEST_CASE("Wythoff parameters reduce the diagonal move to k == l") {
  GameParams p{1, 1};
  for (u64 k = 1; k <= 50; ++k)
    for (u64 l = k; l <= 50; ++l) {
      // l < k+1 iff l == k
      bool legal = true;
      try {
        apply_move(p, {100, 100}, Move::both(k, l));
      } catch (const IllegalMoveError&) {
        legal = false;
      }
      CHECK(legal == (k == l));
    }
}

TEST_CASE("legal_successors refuses oversized inputs") {
  CHECK_THROWS_AS(legal_successors({2, 2}, {9000, 9000}), ResourceLimitError);
  CHECK_NOTHROW(legal_successors({2, 2}, {9000, 9000}, 20000));
}
