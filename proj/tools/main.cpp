#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "heapgames/analysis.hpp"
#include "heapgames/bench.hpp"
#include "heapgames/numeration.hpp"
#include "heapgames/oracle.hpp"
#include "heapgames/play.hpp"
#include "heapgames/strategy.hpp"
#include "heapgames/table_io.hpp"
#include "heapgames/verification.hpp"

using namespace heapgames;

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

// Strategy moves are phrased against the normalized pair; rephrase them in
// the order the position was given.
std::string describe_verdict(const GameParams& params, u64 x_in, u64 y_in) {
  Position pos = normalize({x_in, y_in});
  auto mv = winning_move_fast(params, pos);
  if (!mv) return "P";
  bool x_is_small = x_in <= y_in;
  u64 tx, ty;  // target written in input order
  std::string how;
  if (mv->kind == Move::Kind::SingleHeap) {
    // canonical single-heap moves reduce the larger heap
    if (x_is_small) {
      tx = x_in;
      ty = y_in - mv->take;
      how = "take " + std::to_string(mv->take) + " from heap 2";
    } else {
      tx = x_in - mv->take;
      ty = y_in;
      how = "take " + std::to_string(mv->take) + " from heap 1";
    }
  } else {
    u64 off_x = x_is_small ? mv->k : mv->l;
    u64 off_y = x_is_small ? mv->l : mv->k;
    tx = x_in - off_x;
    ty = y_in - off_y;
    how = "take " + std::to_string(off_x) + " and " + std::to_string(off_y);
  }
  return "N: " + how + " -> (" + std::to_string(tx) + "," + std::to_string(ty) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strategy engine and verification suite for two-heap (s,t) take-away games"};
  app.require_subcommand(1);

  u64 s = 2, t = 2;
  std::string format = "plain";
  std::string out_path;
  u64 seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--s", s, "parameter s >= 1");
    cmd->add_option("--t", t, "parameter t >= 1");
    if (with_format) {
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"csv", "json", "plain"}));
      cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    }
  };

  // tables
  auto* tables = app.add_subcommand("tables", "emit ab / representations / q tables");
  std::string which = "ab";
  u64 n_rows = 13, max_m = 60;
  tables->add_option("kind", which, "ab | representations | q")
      ->required()
      ->check(CLI::IsMember({"ab", "representations", "q"}));
  tables->add_option("--n", n_rows, "last row index for ab/q tables");
  tables->add_option("--max", max_m, "largest integer for the representations table");
  add_common(tables);

  // classify
  auto* classify = app.add_subcommand("classify", "P/N verdict and winning move for a position");
  u64 cx = 0, cy = 0;
  classify->add_option("x", cx, "first heap")->required();
  classify->add_option("y", cy, "second heap")->required();
  add_common(classify, false);

  // play
  auto* play = app.add_subcommand("play", "interactive game against the engine");
  u64 px = 0, py = 0;
  bool have_start = false;
  auto* px_opt = play->add_option("--x", px, "starting heap A");
  auto* py_opt = play->add_option("--y", py, "starting heap B");
  play->add_option("--seed", seed, "seed for the random starting position");
  add_common(play, false);

  // verify
  auto* verify = app.add_subcommand("verify", "machine-check the theorems and lemmas");
  VerifyConfig vcfg;
  bool cell_restricted = false;
  u64 vs = 0, vt = 0;
  verify->add_option("--s", vs, "restrict the grid to one s");
  verify->add_option("--t", vt, "restrict the grid to one t");
  verify->add_option("--n", vcfg.n_max, "table length for sequence checks");
  verify->add_option("--bound", vcfg.bound, "exhaustive position bound");
  verify->add_option("--increments", vcfg.increment_max, "Lemma 1 sweep size");
  verify->add_option("--only", vcfg.only, "run a single suite");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  verify->add_option("--out", out_path, "write report to a file");

  // bench
  auto* bench = app.add_subcommand("bench", "time the linear strategy against the table method");
  u64 bcount = 10000, bmax_x = 1'000'000'000'000'000'000ULL;
  bench->add_option("--count", bcount, "number of fast queries");
  bench->add_option("--max-x", bmax_x, "upper bound for random heap sizes");
  bench->add_option("--seed", seed, "RNG seed");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 1 is the usage-error exit across the tool
  }

  try {
    GameParams params{s, t};

    if (tables->parsed()) {
      std::string text;
      if (which == "ab") {
        SequenceTable table = ab_by_mex(params, n_rows);
        text = format == "csv"    ? table_to_csv(table)
               : format == "json" ? table_to_json(table).dump(2) + "\n"
                                  : table_to_plain(table);
      } else if (which == "representations") {
        ReprTable table = build_repr_table(params, max_m);
        text = format == "csv"    ? repr_table_to_csv(table)
               : format == "json" ? repr_table_to_json(table).dump(2) + "\n"
                                  : repr_table_to_plain(table);
      } else {
        if (format == "plain") {
          QTriple triple = q_sequences(params, n_rows + 1);
          text = q_triple_to_plain(triple);
        } else {
          QTable table = build_q_table(params, n_rows);
          text = format == "csv" ? q_table_to_csv(table) : q_table_to_json(table).dump(2) + "\n";
        }
      }
      return emit(text, out_path);
    }

    if (classify->parsed()) {
      if (cx > kValueMax || cy > kValueMax) {
        std::cerr << "heap sizes beyond 2^63-1 are outside the value contract\n";
        return 1;
      }
      std::string verdict = describe_verdict(params, cx, cy);
      std::cout << verdict << "\n";
      return verdict[0] == 'P' ? 0 : 10;
    }

    if (play->parsed()) {
      if (*px_opt || *py_opt) {
        have_start = true;
      }
      Position start{px, py};
      if (!have_start) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u64> dist(1, 40);
        start = {dist(rng), dist(rng)};
      }
      return run_play_session(params, start, std::cin, std::cout);
    }

    if (verify->parsed()) {
      if ((vs == 0) != (vt == 0)) {
        std::cerr << "provide both --s and --t to restrict the grid\n";
        return 1;
      }
      if (vs != 0) vcfg.grid.emplace_back(vs, vt);
      auto reports = run_verification(vcfg);
      std::string text =
          format == "json" ? render_json(reports).dump(2) + "\n" : render_text(reports);
      int rc = emit(text, out_path);
      if (rc != 0) return rc;
      return all_passed(reports) ? 0 : 2;
    }

    if (bench->parsed()) {
      FastBenchResult fast = bench_fast(params, bcount, bmax_x, seed);
      std::vector<TableBenchPoint> slow =
          bench_table(params, {10'000, 100'000, 1'000'000, 10'000'000});
      std::ostringstream text;
      if (format == "json") {
        nlohmann::json j{{"fast",
                          {{"queries", fast.queries},
                           {"max_x", fast.max_x},
                           {"total_ms", fast.total_ms},
                           {"max_query_ms", fast.max_query_ms},
                           {"mean_digit_ops", fast.mean_digit_ops},
                           {"p_count", fast.p_count}}},
                         {"table", nlohmann::json::array()}};
        for (const auto& p : slow)
          j["table"].push_back({{"x", p.x}, {"ms", p.ms}, {"rows", p.rows}});
        text << j.dump(2) << "\n";
      } else {
        text << "fast strategy: " << fast.queries << " random positions with x,y <= " << fast.max_x
             << "\n";
        text << "  total " << fast.total_ms << " ms, worst query " << fast.max_query_ms
             << " ms, mean digit ops " << fast.mean_digit_ops << "\n";
        text << "table method (build until the table covers x, then look up):\n";
        text << "        x       mean ms         rows\n";
        for (const auto& p : slow) {
          text << "  " << p.x << "  " << p.ms << "  " << p.rows << "\n";
        }
        if (!slow.empty() && slow[0].ms > 0) {
          double rate = slow.back().ms / static_cast<double>(slow.back().x);  // ms per unit of x
          text << "linear extrapolation to x = 10^18: ~" << rate * 1e18 / 3.6e6
               << " hours of table construction\n";
        }
      }
      return emit(text.str(), out_path);
    }
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
