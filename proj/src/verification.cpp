#include "heapgames/verification.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "heapgames/analysis.hpp"
#include "heapgames/numeration.hpp"
#include "heapgames/oracle.hpp"
#include "heapgames/strategy.hpp"

namespace heapgames {

std::vector<GameParams> VerifyConfig::effective_grid() const {
  if (!grid.empty()) return grid;
  std::vector<GameParams> full;
  for (u64 s = 1; s <= 4; ++s)
    for (u64 t = 1; t <= 4; ++t) full.emplace_back(s, t);
  return full;
}

const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names = {
      "theorem1", "theorem3", "theorem4", "agreement", "fixpoint", "lemma1",
      "lemma2",   "lemma34",  "gaps",     "spectral",  "roundtrip"};
  return names;
}

namespace {

std::string cell_name(const GameParams& p) {
  return "s=" + std::to_string(p.s) + ",t=" + std::to_string(p.t);
}

std::string pos_str(const Position& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

void suite_theorem1(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  std::set<Position> from_mex;
  for (const TableRow& row : ab_by_mex(params, cfg.bound).rows)  // A_n <= B_n <= bound needs n <= bound rows
    if (row.b <= cfg.bound) from_mex.insert({row.a, row.b});
  auto retro = p_positions_retrograde(params, cfg.bound, std::max<u64>(cfg.bound, 300));
  std::set<Position> from_rules(retro.begin(), retro.end());
  if (from_mex == from_rules) {
    rep.add_pass(cell_name(params),
                 std::to_string(from_rules.size()) + " P-positions up to " +
                     std::to_string(cfg.bound));
  } else {
    std::string diff;
    for (const auto& p : from_mex)
      if (!from_rules.count(p)) diff += " mex-only " + pos_str(p);
    for (const auto& p : from_rules)
      if (!from_mex.count(p)) diff += " rules-only " + pos_str(p);
    rep.add_fail(cell_name(params), diff);
  }
}

void suite_theorem3(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  SequenceTable mex = ab_by_mex(params, cfg.n_max);
  SequenceTable evil = evil_old_pairs(params, cfg.n_max);
  for (u64 n = 0; n <= cfg.n_max; ++n) {
    if (mex.rows[n] != evil.rows[n]) {
      rep.add_fail(cell_name(params),
                   "n=" + std::to_string(n) + ": (V,W)=(" + std::to_string(evil.rows[n].a) + "," +
                       std::to_string(evil.rows[n].b) + ") vs (A,B)=(" +
                       std::to_string(mex.rows[n].a) + "," + std::to_string(mex.rows[n].b) + ")");
      return;
    }
  }
  rep.add_pass(cell_name(params), "n <= " + std::to_string(cfg.n_max));
}

void suite_theorem4(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  Report sub = theorem4_equivalence(params, cfg.theorem4_n);
  for (const CheckResult& c : sub.checks)
    rep.checks.push_back({cell_name(params) + " " + c.name, c.status, c.detail});
}

void suite_agreement(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  auto retro = p_positions_retrograde(params, cfg.bound, std::max<u64>(cfg.bound, 300));
  std::set<Position> p_set(retro.begin(), retro.end());
  SequenceTable table = ab_covering(params, cfg.bound);
  for (u64 x = 0; x <= cfg.bound; ++x) {
    for (u64 y = x; y <= cfg.bound; ++y) {
      Position pos{x, y};
      PN fast = classify_fast(params, pos);
      PN by_table = classify_table(params, pos, table).kind;
      PN by_rules = p_set.count(pos) ? PN::P : PN::N;
      if (fast != by_table || fast != by_rules) {
        rep.add_fail(cell_name(params),
                     pos_str(pos) + ": fast=" + (fast == PN::P ? "P" : "N") +
                         " table=" + (by_table == PN::P ? "P" : "N") +
                         " retrograde=" + (by_rules == PN::P ? "P" : "N"));
        return;
      }
    }
  }
  rep.add_pass(cell_name(params), "three-way agreement, x <= y <= " + std::to_string(cfg.bound));
}

void suite_fixpoint(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  auto retro = p_positions_retrograde(params, cfg.bound, std::max<u64>(cfg.bound, 300));
  std::set<Position> p_set(retro.begin(), retro.end());
  for (u64 x = 0; x <= cfg.bound; ++x) {
    for (u64 y = x; y <= cfg.bound; ++y) {
      Position pos{x, y};
      auto mv = winning_move_fast(params, pos);
      bool in_p = p_set.count(pos) != 0;
      if (in_p != !mv.has_value()) {
        rep.add_fail(cell_name(params), pos_str(pos) + ": witness presence contradicts P-set");
        return;
      }
      if (mv) {
        Position target = normalize(apply_move(params, pos, *mv));
        if (!p_set.count(target)) {
          rep.add_fail(cell_name(params),
                       pos_str(pos) + ": witness " + to_string(*mv) + " lands outside P at " +
                           pos_str(target));
          return;
        }
      } else if (pos.x + pos.y > 0) {
        for (const Position& succ : legal_successors(params, pos)) {
          if (p_set.count(succ)) {
            rep.add_fail(cell_name(params),
                         "P-position " + pos_str(pos) + " can move to P-position " + pos_str(succ));
            return;
          }
        }
      }
    }
  }
  rep.add_pass(cell_name(params), "fixpoint sound, x <= y <= " + std::to_string(cfg.bound));
}

void suite_lemma1(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  Representation rep_m = represent(params, 0);
  for (u64 m = 0; m < cfg.increment_max; ++m) {
    // which alternating tail applies predicts the successor's parity
    TailParity predicted = !rep_m.is_zero() && rep_m.digits[0] == params.r() ? TailParity::Old
                                                                             : TailParity::Evil;
    Representation next = increment(params, rep_m);
    if (next != represent(params, m + 1)) {
      rep.add_fail(cell_name(params), "increment disagrees with represent at m=" +
                                          std::to_string(m + 1));
      return;
    }
    if (tail_parity(next) != predicted) {
      rep.add_fail(cell_name(params),
                   "parity of m=" + std::to_string(m + 1) + " contradicts the case prediction");
      return;
    }
    rep_m = std::move(next);
  }
  rep.add_pass(cell_name(params), "m <= " + std::to_string(cfg.increment_max));
}

void suite_lemma2(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  SequenceTable pairs = evil_old_pairs(params, cfg.n_max);
  for (const TableRow& row : pairs.rows) {
    u128 lhs = u128{row.b};
    u128 rhs = u128{params.s} * row.a + u128{params.t} * row.n;
    if (lhs != rhs) {
      rep.add_fail(cell_name(params), "k=" + std::to_string(row.n) + ": W_k - s*V_k != t*k");
      return;
    }
  }
  rep.add_pass(cell_name(params), "k <= " + std::to_string(cfg.n_max));
}

void suite_lemma34(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  // enough Q terms that q1 reaches the requested size: first occurrences sit
  // at indices A'_v <= 2v
  std::size_t len = 2 * cfg.q1_terms + 16;
  QTriple triple = q_sequences(params, len);
  while (triple.q1_indices.size() < cfg.q1_terms) {
    len *= 2;
    triple = q_sequences(params, len);
  }
  Report sub = check_lemma34(triple);
  for (const CheckResult& c : sub.checks)
    rep.checks.push_back({cell_name(params) + " " + c.name, c.status, c.detail});
}

void suite_gaps(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  GapStats stats = gap_statistics(ab_by_mex(params, cfg.n_max));
  for (const auto& [gap, count] : stats.a_gaps) {
    if (gap != 1 && gap != 2) {
      rep.add_fail(cell_name(params), "A-gap " + std::to_string(gap));
      return;
    }
  }
  u64 small = params.s + params.t, big = 2 * params.s + params.t;
  for (const auto& [gap, count] : stats.b_gaps) {
    if (gap != small && gap != big) {
      rep.add_fail(cell_name(params), "B-gap " + std::to_string(gap));
      return;
    }
  }
  if (!stats.b_gaps.count(small) || !stats.b_gaps.count(big)) {
    rep.add_fail(cell_name(params), "not both B-gap values occurred by n=" +
                                        std::to_string(cfg.n_max));
    return;
  }
  rep.add_pass(cell_name(params), "A-gaps in {1,2}, B-gaps in {" + std::to_string(small) + "," +
                                      std::to_string(big) + "}, both present");
}

void suite_spectral(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  u64 n = std::min<u64>(cfg.n_max, 1000);
  SequenceTable table = ab_by_mex(params, n);
  std::vector<u64> a_col, b_col;
  for (const TableRow& row : table.rows) {
    a_col.push_back(row.a);
    b_col.push_back(row.b);
  }

  if (params.s == 1) {
    // Both columns are genuine homogeneous spectra; every prefix must stay
    // a spectral candidate.
    for (std::size_t len = 2; len <= a_col.size(); len = len < 64 ? len + 1 : len * 4) {
      auto sa = spectral_bounds(std::span<const u64>(a_col.data(), len));
      auto sb = spectral_bounds(std::span<const u64>(b_col.data(), len));
      if (!sa.spectral_candidate() || !sb.spectral_candidate()) {
        rep.add_fail(cell_name(params) + " spectral_true",
                     "prefix " + std::to_string(len) + " rejected for s=1");
        return;
      }
    }
    rep.add_pass(cell_name(params) + " spectral_true");

    SequenceTable closed = beatty_table(params.t, n);
    for (u64 i = 0; i <= n; ++i) {
      if (closed.rows[i] != table.rows[i]) {
        rep.add_fail(cell_name(params) + " beatty_equals_mex",
                     "n=" + std::to_string(i) + ": (" + std::to_string(closed.rows[i].a) + "," +
                         std::to_string(closed.rows[i].b) + ") vs (" +
                         std::to_string(table.rows[i].a) + "," + std::to_string(table.rows[i].b) +
                         ")");
        return;
      }
    }
    rep.add_pass(cell_name(params) + " beatty_equals_mex", "n <= " + std::to_string(n));
    return;
  }

  // s >= 2: both gap values force lower >= upper; the flag must drop once
  // they have both been seen, and stay down.
  std::size_t both_at = 0;
  bool seen_small = false, seen_big = false;
  for (std::size_t i = 1; i < b_col.size() && both_at == 0; ++i) {
    u64 gap = b_col[i] - b_col[i - 1];
    seen_small |= gap == params.s + params.t;
    seen_big |= gap == 2 * params.s + params.t;
    if (seen_small && seen_big) both_at = i + 1;
  }
  if (both_at == 0) {
    rep.add_fail(cell_name(params) + " spectral_false", "B-gaps never both occurred");
    return;
  }
  auto sb_first = spectral_bounds(std::span<const u64>(b_col.data(), both_at));
  auto sb_full = spectral_bounds(std::span<const u64>(b_col.data(), b_col.size()));
  auto sa_full = spectral_bounds(std::span<const u64>(a_col.data(), a_col.size()));
  if (sb_first.spectral_candidate() || sb_full.spectral_candidate()) {
    rep.add_fail(cell_name(params) + " spectral_false", "B-prefix still spectral for s>=2");
    return;
  }
  if (sa_full.spectral_candidate()) {
    rep.add_fail(cell_name(params) + " spectral_false",
                 "A-prefix of length " + std::to_string(a_col.size()) + " still spectral");
    return;
  }
  rep.add_pass(cell_name(params) + " spectral_false",
               "refuted from B-prefix " + std::to_string(both_at) + " on; d=" +
                   sb_first.lower.str() + " vs " + sb_first.upper.str());
}

void suite_roundtrip(const VerifyConfig& cfg, Report& rep, const GameParams& params) {
  u64 max_m = cfg.increment_max;
  for (u64 m = 0; m <= max_m; ++m) {
    Representation r = represent(params, m);
    if (!validate(params, r)) {
      rep.add_fail(cell_name(params), "represent(" + std::to_string(m) + ") is invalid");
      return;
    }
    if (value(params, r) != m) {
      rep.add_fail(cell_name(params), "value(represent(" + std::to_string(m) + ")) mismatch");
      return;
    }
  }
  rep.add_pass(cell_name(params), "m <= " + std::to_string(max_m));
}

}  // namespace

std::vector<Report> run_verification(const VerifyConfig& config) {
  std::vector<GameParams> grid = config.effective_grid();
  std::vector<Report> reports;

  auto want = [&config](const std::string& name) {
    return config.only.empty() || config.only == name;
  };
  bool known = config.only.empty();
  for (const auto& n : verification_suite_names()) known = known || n == config.only;
  if (!known) throw std::invalid_argument("unknown suite '" + config.only + "'");

  auto run_suite = [&](const std::string& name, bool skip, const std::string& skip_why,
                       auto&& per_cell) {
    if (!want(name)) return;
    Report rep{name, {}};
    if (skip) {
      rep.add_skip("all", skip_why);
    } else {
      for (const GameParams& params : grid) per_cell(rep, params);
    }
    reports.push_back(std::move(rep));
  };

  bool no_bound = config.bound == 0;
  bool no_n = config.n_max == 0;
  run_suite("theorem1", no_bound, "bound is 0", [&](Report& r, const GameParams& p) {
    suite_theorem1(config, r, p);
  });
  run_suite("theorem3", no_n, "n_max is 0", [&](Report& r, const GameParams& p) {
    suite_theorem3(config, r, p);
  });
  run_suite("theorem4", false, "", [&](Report& r, const GameParams& p) {
    suite_theorem4(config, r, p);
  });
  run_suite("agreement", no_bound, "bound is 0", [&](Report& r, const GameParams& p) {
    suite_agreement(config, r, p);
  });
  run_suite("fixpoint", no_bound, "bound is 0", [&](Report& r, const GameParams& p) {
    suite_fixpoint(config, r, p);
  });
  run_suite("lemma1", config.increment_max == 0, "increment sweep is empty",
            [&](Report& r, const GameParams& p) { suite_lemma1(config, r, p); });
  run_suite("lemma2", no_n, "n_max is 0", [&](Report& r, const GameParams& p) {
    suite_lemma2(config, r, p);
  });
  run_suite("lemma34", false, "", [&](Report& r, const GameParams& p) {
    suite_lemma34(config, r, p);
  });
  run_suite("gaps", no_n, "n_max is 0", [&](Report& r, const GameParams& p) {
    suite_gaps(config, r, p);
  });
  run_suite("spectral", no_n, "n_max is 0", [&](Report& r, const GameParams& p) {
    suite_spectral(config, r, p);
  });
  run_suite("roundtrip", false, "", [&](Report& r, const GameParams& p) {
    suite_roundtrip(config, r, p);
  });
  return reports;
}

bool all_passed(const std::vector<Report>& reports) {
  for (const Report& r : reports)
    if (!r.all_passed()) return false;
  return true;
}

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const Report& rep : reports) {
    out << "[" << (rep.all_passed() ? "ok" : "FAIL") << "] " << rep.name << "\n";
    for (const CheckResult& c : rep.checks) {
      out << "    " << to_string(c.status) << "  " << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
  }
  out << (all_passed(reports) ? "all suites passed" : "FAILURES present") << "\n";
  return out.str();
}

nlohmann::json render_json(const std::vector<Report>& reports) {
  nlohmann::json suites = nlohmann::json::array();
  for (const Report& rep : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : rep.checks)
      checks.push_back({{"name", c.name},
                        {"status", c.status == CheckStatus::Pass   ? "pass"
                                   : c.status == CheckStatus::Fail ? "fail"
                                                                   : "skipped"},
                        {"detail", c.detail}});
    suites.push_back({{"name", rep.name}, {"passed", rep.all_passed()}, {"checks", checks}});
  }
  return {{"suites", suites}, {"all_passed", all_passed(reports)}};
}

}  // namespace heapgames
