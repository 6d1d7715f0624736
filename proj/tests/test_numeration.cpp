#include "heapgames/numeration.hpp"

#include <algorithm>
#include <map>

#include "doctest.h"

using namespace heapgames;

namespace {

// Independent oracle: enumerate every valid fixed-length digit string over
// the bases and collect values, without going through represent(). With the
// length fixed, uniqueness of representation means one string per value.
void enumerate_valid(const GameParams& params, const std::vector<u64>& bases, std::size_t pos,
                     u64 acc, u64 limit, std::vector<u64>& digits,
                     std::map<u64, std::vector<std::vector<u64>>>& out) {
  if (pos == bases.size()) {
    out[acc].push_back(digits);
    return;
  }
  u64 r = params.r();
  for (u64 d = 0; d <= r; ++d) {
    u64 v = acc + d * bases[pos];
    if (v > limit) break;
    // coupling rule against the digit below (little-endian neighbor)
    if (pos > 0 && d == r && digits[pos - 1] > params.q()) continue;
    digits[pos] = d;
    enumerate_valid(params, bases, pos + 1, v, limit, digits, out);
    digits[pos] = 0;
  }
}

std::map<u64, std::vector<std::vector<u64>>> all_representations(const GameParams& params,
                                                                 u64 limit) {
  Bases b = bases_up_to(params, limit);
  std::vector<u64> digits(b.u.size(), 0);
  std::map<u64, std::vector<std::vector<u64>>> out;
  enumerate_valid(params, b.u, 0, 0, limit, digits, out);
  return out;
}

std::string render(const GameParams& p, u64 m) { return render_digits(p, represent(p, m)); }

// length-then-lexicographic comparison of canonical digit strings, big-endian
bool rep_less(const Representation& a, const Representation& b) {
  if (a.digits.size() != b.digits.size()) return a.digits.size() < b.digits.size();
  return std::lexicographical_compare(a.digits.rbegin(), a.digits.rend(), b.digits.rbegin(),
                                      b.digits.rend());
}

}  // namespace

TEST_CASE("base recurrences") {
  CHECK(bases_up_to({2, 2}, 60).u == std::vector<u64>{1, 4, 14, 50, 178});
  CHECK(bases_up_to({1, 1}, 10).u == std::vector<u64>{1, 2, 3, 5, 8, 13});
  CHECK(bases_up_to({2, 1}, 5).u == std::vector<u64>{1, 3, 8});
  auto fib = bases_up_to({1, 1}, 1000).u;
  for (std::size_t i = 2; i < fib.size(); ++i) CHECK(fib[i] == fib[i - 1] + fib[i - 2]);
}

TEST_CASE("greedy representation matches the worked rows") {
  GameParams p{2, 2};
  CHECK(represent(p, 31).digits == std::vector<u64>{3, 0, 2});   // reads 203
  CHECK(represent(p, 60).digits == std::vector<u64>{2, 2, 0, 1});  // reads 1022
  CHECK(represent(p, 0).digits.empty());
  CHECK(render(p, 31) == "203");
  CHECK(render(p, 45) == "303");
}

TEST_CASE("value examples") {
  GameParams p{2, 2};
  CHECK(value(p, Representation{{3, 1}}) == 7);  // reads 13
  CHECK(value(p, Representation{{}}) == 0);
  CHECK(value(p, Representation{{0, 0, 0, 1}}) == 50);  // reads 1000
}

TEST_CASE("validate accepts exactly the constrained canonical strings") {
  GameParams p{2, 2};
  CHECK_FALSE(validate(p, Representation{{2, 3}}));  // reads 32: d1=r forces d0 < 2
  CHECK(validate(p, Representation{{1, 3}}));        // reads 31
  CHECK_FALSE(validate(p, Representation{{1, 0}}));  // leading zero on top
  CHECK(validate(p, Representation{{}}));
  CHECK_FALSE(validate(p, Representation{{4}}));  // digit beyond r
}

TEST_CASE("shifts") {
  GameParams p{2, 2};
  Representation six = represent(p, 6);  // reads 12
  CHECK(value(p, left_shift(six)) == 22);
  CHECK(shifted_value(p, six) == 22);
  CHECK(value(p, left_shift(represent(p, 1))) == 4);
  CHECK(left_shift(Representation{{}}) == Representation{{}});

  CHECK(value(p, right_shift(represent(p, 4))) == 1);
  CHECK(value(p, right_shift(represent(p, 50))) == 14);
  CHECK_THROWS_AS(right_shift(represent(p, 7)), MalformedRepError);  // reads 13
  CHECK_THROWS_AS(right_shift(Representation{{}}), MalformedRepError);

  for (u64 m : {4, 8, 12, 22, 50, 54}) {
    Representation rep = represent(p, m);
    CHECK(left_shift(right_shift(rep)) == rep);
  }
}

TEST_CASE("tail parity") {
  GameParams p{2, 2};
  CHECK(tail_parity(represent(p, 14)) == TailParity::Evil);  // reads 100
  CHECK(tail_parity(represent(p, 4)) == TailParity::Old);    // reads 10
  CHECK(tail_parity(represent(p, 0)) == TailParity::ZeroBoth);
}

TEST_CASE("increment digit surgery") {
  GameParams p{2, 2};
  CHECK(increment(p, represent(p, 13)) == represent(p, 14));  // 31 -> 100
  CHECK(increment(p, represent(p, 49)) == represent(p, 50));  // 313 -> 1000
  CHECK(increment(p, represent(p, 1)) == represent(p, 2));
  CHECK(increment(p, Representation{{}}) == represent(p, 1));
  CHECK_THROWS_AS(increment(p, Representation{{2, 3}}), MalformedRepError);
}

TEST_CASE("increment agrees with represent across the grid") {
  for (u64 s = 1; s <= 4; ++s) {
    for (u64 t = 1; t <= 4; ++t) {
      GameParams p{s, t};
      Representation rep;
      for (u64 m = 0; m <= 30000; ++m) {
        // the case that fires is visible in d_0; it predicts the parity
        TailParity predicted = !rep.is_zero() && rep.digits[0] == p.r() ? TailParity::Old
                                                                        : TailParity::Evil;
        rep = increment(p, rep);
        CHECK(rep == represent(p, m + 1));
        CHECK(tail_parity(rep) == predicted);
      }
    }
  }
}

TEST_CASE("round trip and uniqueness by exhaustive enumeration") {
  for (GameParams p : {GameParams{2, 2}, GameParams{1, 1}, GameParams{3, 1}, GameParams{1, 3}}) {
    auto reps = all_representations(p, 4000);
    for (u64 m = 1; m <= 4000; ++m) {
      REQUIRE(reps.count(m) == 1);
      REQUIRE(reps[m].size() == 1);  // uniqueness
      Representation greedy = represent(p, m);
      const auto& found = reps[m][0];
      // enumerated digits are padded with zeros on top
      REQUIRE(found.size() >= greedy.digits.size());
      for (std::size_t i = 0; i < found.size(); ++i)
        CHECK(found[i] == (i < greedy.digits.size() ? greedy.digits[i] : 0));
      CHECK(value(p, greedy) == m);
      CHECK(validate(p, greedy));
    }
  }
}

TEST_CASE("representation order mirrors integer order") {
  GameParams p{3, 2};
  Representation prev = represent(p, 0);
  for (u64 m = 1; m <= 5000; ++m) {
    Representation cur = represent(p, m);
    CHECK(rep_less(prev, cur));
    prev = cur;
  }
}

TEST_CASE("Zeckendorf special case") {
  GameParams p{1, 1};
  for (u64 m = 1; m <= 10000; ++m) {
    Representation rep = represent(p, m);
    for (std::size_t i = 0; i < rep.digits.size(); ++i) {
      CHECK(rep.digits[i] <= 1);
      if (i + 1 < rep.digits.size()) CHECK((rep.digits[i] == 0 || rep.digits[i + 1] == 0));
    }
  }
}

TEST_CASE("rank of evil numbers") {
  CHECK(rank_evil({2, 2}, 12) == 9);
  CHECK(rank_evil({2, 2}, 0) == 0);

  for (GameParams p : {GameParams{3, 1}, GameParams{2, 2}, GameParams{1, 1}, GameParams{1, 4}}) {
    u64 brute = 0;
    for (u64 v = 1; v <= 3000; ++v) {
      if (tail_parity(represent(p, v)) == TailParity::Evil) ++brute;
      CHECK(rank_evil(p, v) == brute);
    }
  }
}

TEST_CASE("select inverts rank") {
  CHECK(select_evil({2, 2}, 11) == 14);
  CHECK(select_evil({2, 2}, 0) == 0);
  CHECK(select_evil({2, 1}, 7) == 9);

  for (GameParams p : {GameParams{2, 2}, GameParams{1, 2}, GameParams{4, 3}}) {
    for (u64 n = 0; n <= 500; ++n) {
      u64 v = select_evil(p, n);
      CHECK(rank_evil(p, v) == n);
      if (n > 0) CHECK(tail_parity(represent(p, v)) == TailParity::Evil);
    }
    for (u64 x = 0; x <= 500; ++x) CHECK(select_evil(p, rank_evil(p, x)) <= x);
  }
}

TEST_CASE("every positive integer is exactly one of evil or old") {
  for (GameParams p : {GameParams{2, 2}, GameParams{3, 4}}) {
    for (u64 m = 1; m <= 10000; ++m) {
      TailParity parity = tail_parity(represent(p, m));
      CHECK((parity == TailParity::Evil || parity == TailParity::Old));
    }
  }
}

TEST_CASE("evil/old pairs rebuild the P-position table") {
  SequenceTable pairs = evil_old_pairs({2, 2}, 13);
  CHECK(pairs.source == TableSource::EvilOld);
  CHECK(pairs.rows[0] == TableRow{0, 0, 0});
  CHECK(pairs.rows[11] == TableRow{11, 14, 50});
  CHECK(pairs.rows[13] == TableRow{13, 16, 58});
  // W_5 - s V_5 = t*5
  CHECK(pairs.rows[5].b - 2 * pairs.rows[5].a == 10);
}

TEST_CASE("digit strings render and parse, including multi-digit bases") {
  GameParams p{2, 2};
  CHECK(render_digits(p, represent(p, 0)) == "0");
  CHECK(parse_digits(p, "203") == represent(p, 31));
  CHECK(parse_digits(p, "0") == represent(p, 0));
  CHECK_THROWS_AS(parse_digits(p, "2x3"), MalformedRepError);

  GameParams wide{5, 7};  // r = 11 needs separators
  Representation rep = represent(wide, 140);
  CHECK(render_digits(wide, rep).find('.') != std::string::npos);
  CHECK(parse_digits(wide, render_digits(wide, rep)) == rep);
  CHECK(value(wide, parse_digits(wide, "1.0.11")) ==
        1 * bases_up_to(wide, 200).u[2] + 0 + 11);
}

TEST_CASE("width contract overflow handling") {
  GameParams p{2, 2};
  CHECK_NOTHROW(represent(p, kValueMax));
  CHECK(value(p, represent(p, kValueMax)) == kValueMax);
  // the witness base past the contract edge can itself overflow 64 bits
  CHECK_THROWS_AS(bases_up_to({4, 4}, kValueMax), std::overflow_error);
  // greedy representation still covers the full contract for every cell
  for (u64 s = 1; s <= 4; ++s)
    for (u64 t = 1; t <= 4; ++t) {
      GameParams g{s, t};
      CHECK(value(g, represent(g, kValueMax)) == kValueMax);
      CHECK(validate(g, represent(g, kValueMax)));
    }
  // a shifted value beyond 64 bits must refuse rather than wrap
  Representation top = represent(p, kValueMax);
  CHECK(shifted_value_wide(p, top) > u128{kValueMax});
  CHECK_THROWS_AS(shifted_value(p, top), std::overflow_error);
  CHECK_THROWS_AS(select_evil(p, kValueMax), std::overflow_error);
}

TEST_CASE("digit op counter is bounded by the representation length") {
  GameParams p{1, 1};
  (void)represent(p, u64{1} << 62);  // warm the base cache
  reset_digit_ops();
  Representation rep = represent(p, 999'999'999'999'999'999ULL);
  (void)tail_parity(rep);
  (void)shifted_value_wide(p, rep);
  CHECK(digit_ops() <= 200);
  CHECK(digit_ops() >= 2 * rep.digits.size());
}
