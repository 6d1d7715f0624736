#include "heapgames/analysis.hpp"

#include <set>

#include <cmath>

#include "doctest.h"
#include "heapgames/numeration.hpp"
#include "heapgames/oracle.hpp"

using namespace heapgames;

TEST_CASE("Q sequence for s=2 t=1 matches the worked table") {
  QTriple triple = q_sequences({2, 1}, 21);
  CHECK(triple.q == std::vector<u64>{0, 1, 2, 1, 3, 4, 2, 5, 6, 7, 8,
                                     3, 9, 10, 4, 11, 12, 13, 14, 5, 15});

  QTriple longer = q_sequences({2, 1}, 40);
  std::vector<u64> a_prefix(longer.a_prime.begin(), longer.a_prime.begin() + 20);
  CHECK(a_prefix == std::vector<u64>{0, 1, 2, 4, 5, 7, 8, 9, 10, 12,
                                     13, 15, 16, 17, 18, 20, 21, 23, 24, 26});
  REQUIRE(longer.b_prime.size() >= 8);
  std::vector<u64> b_prefix(longer.b_prime.begin(), longer.b_prime.begin() + 8);
  CHECK(b_prefix == std::vector<u64>{0, 3, 6, 11, 14, 19, 22, 25});
}

TEST_CASE("Q starts 0, 1 for every parameter choice") {
  for (u64 s = 1; s <= 4; ++s)
    for (u64 t = 1; t <= 4; ++t) {
      QTriple triple = q_sequences({s, t}, 3);
      CHECK(triple.q[0] == 0);
      CHECK(triple.q[1] == 1);
      // Q_2 = 1 for s=t=1, else 2
      if (s + t > 2) CHECK(triple.q[2] == 2);
      else CHECK(triple.q[2] == 1);
    }
}

TEST_CASE("every value occurs once or twice, index sets partition") {
  QTriple triple = q_sequences({3, 2}, 2000);
  std::map<u64, u64> counts;
  for (u64 v : triple.q) counts[v] += 1;
  for (const auto& [v, c] : counts) CHECK((c == 1 || c == 2));

  // q1 and q2 overlap exactly at the single occurrence of 0
  std::set<u64> q1(triple.q1_indices.begin(), triple.q1_indices.end());
  std::set<u64> q2(triple.q2_indices.begin(), triple.q2_indices.end());
  for (u64 idx : q2)
    if (idx != 0) CHECK(q1.count(idx) == 0);
  CHECK(q1.count(0) == 1);
  CHECK(q2.count(0) == 1);
}

TEST_CASE("lemma 3 and 4 checks pass on generated sequences") {
  CHECK(check_lemma34(q_sequences({2, 1}, 21)).all_passed());
  CHECK(check_lemma34(q_sequences({1, 1}, 500)).all_passed());
  CHECK(check_lemma34(q_sequences({4, 4}, 2000)).all_passed());
  CHECK(check_lemma34(q_sequences({1, 1}, 1)).all_passed());  // vacuous
}

TEST_CASE("theorem 4 equivalence") {
  CHECK(theorem4_equivalence({2, 1}, 7).all_passed());
  CHECK(theorem4_equivalence({2, 2}, 100).all_passed());
  CHECK(theorem4_equivalence({1, 1}, 100).all_passed());
}

TEST_CASE("A'/B' index sets are complementary") {
  QTriple triple = q_sequences({2, 3}, 3000);
  std::set<u64> indices;
  for (std::size_t v = 1; v < triple.a_prime.size(); ++v) indices.insert(triple.a_prime[v]);
  u64 hole_free = triple.a_prime.back();
  for (std::size_t v = 1; v < triple.b_prime.size(); ++v) {
    CHECK(indices.insert(triple.b_prime[v]).second);  // no collisions
  }
  for (u64 k = 1; k <= hole_free; ++k) CHECK(indices.count(k) == 1);
}

TEST_CASE("spectral bounds on worked prefixes") {
  // s=t=2 B-prefix: both gap values present, so the test must reject it
  std::vector<u64> b_prefix = {0, 4, 8, 12, 18, 22, 26};
  SpectralBounds sb = spectral_bounds(b_prefix);
  CHECK(sb.lower >= Rational{5, 1});
  CHECK(sb.upper <= Rational{5, 1});
  CHECK_FALSE(sb.spectral_candidate());

  // Wythoff A-prefix is a genuine spectrum prefix
  std::vector<u64> wythoff_a = {0, 1, 3, 4, 6, 8, 9, 11};
  CHECK(spectral_bounds(wythoff_a).spectral_candidate());

  // arithmetic progressions are spectra
  std::vector<u64> arith = {0, 2, 4, 6};
  SpectralBounds sa = spectral_bounds(arith);
  CHECK(sa.lower == Rational{5, 3});
  CHECK(sa.upper == Rational{7, 3});
  CHECK(sa.spectral_candidate());

  CHECK_THROWS_AS(spectral_bounds(std::vector<u64>{7}), std::invalid_argument);
}

TEST_CASE("beatty closed form equals the recurrence for s=1") {
  SequenceTable golden = beatty_table(1, 4);
  CHECK(golden.rows[1].a == 1);
  CHECK(golden.rows[2].a == 3);
  CHECK(golden.rows[3].a == 4);
  CHECK(golden.rows[4].a == 6);
  CHECK(golden.rows[0] == TableRow{0, 0, 0});
  CHECK(golden.source == TableSource::BeattyClosedForm);

  for (u64 t = 1; t <= 3; ++t) {
    SequenceTable closed = beatty_table(t, 500);
    SequenceTable mex = ab_by_mex({1, t}, 500);
    CHECK(closed.rows == mex.rows);
  }
}

TEST_CASE("gap statistics") {
  GapStats stats = gap_statistics(ab_by_mex({2, 2}, 13));
  CHECK(stats.a_gaps.size() == 2);
  CHECK(stats.a_gaps.count(1) == 1);
  CHECK(stats.a_gaps.count(2) == 1);
  CHECK(stats.b_gaps.size() == 2);
  CHECK(stats.b_gaps.count(4) == 1);
  CHECK(stats.b_gaps.count(6) == 1);

  GapStats wy = gap_statistics(ab_by_mex({1, 1}, 1000));
  CHECK(wy.a_gaps.size() == 2);
  CHECK(wy.b_gaps.count(2) == 1);
  CHECK(wy.b_gaps.count(3) == 1);

  SequenceTable single{{2, 2}, TableSource::MexRecurrence, {{0, 0, 0}}};
  GapStats empty = gap_statistics(single);
  CHECK(empty.a_gaps.empty());
  CHECK(empty.b_gaps.empty());
}

TEST_CASE("quasilinearity experiment") {
  QuasilinearityReport wy = quasilinearity_experiment({1, 1}, 300, 50);
  CHECK(wy.max_spread <= 1);  // spectral sequences have bounded discrepancy
  CHECK_FALSE(wy.exploratory);

  QuasilinearityReport deg = quasilinearity_experiment({2, 2}, 300, 0);
  CHECK(deg.max_spread == 0);

  QuasilinearityReport s2 = quasilinearity_experiment({2, 2}, 300, 50);
  CHECK(s2.n_max == 300);  // recorded, not asserted
  CHECK(s2.max_spread > 0);

  QuasilinearityReport expl = quasilinearity_experiment({2, 3}, 50, 10);
  CHECK(expl.exploratory);
}

TEST_CASE("base ratios converge to the characteristic root") {
  for (u64 s = 1; s <= 4; ++s)
    for (u64 t = 1; t <= 4; ++t) {
      GameParams p{s, t};
      auto u = bases_up_to(p, u64{1} << 50).u;
      REQUIRE(u.size() >= 3);
      double ratio = static_cast<double>(u.back()) / static_cast<double>(u[u.size() - 2]);
      CHECK(std::abs(ratio - characteristic_root(p)) < 1e-9);
      CHECK(characteristic_root(p) > 1.0);
    }
}

TEST_CASE("evil/old pairs equal the mex table end to end") {
  for (u64 s = 1; s <= 4; ++s)
    for (u64 t = 1; t <= 4; ++t) {
      SequenceTable evil = evil_old_pairs({s, t}, 300);
      SequenceTable mex = ab_by_mex({s, t}, 300);
      CHECK(evil.rows == mex.rows);
    }
}
