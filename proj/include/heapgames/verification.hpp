#pragma once

#include <string>
#include <vector>

#include "heapgames/report.hpp"
#include "heapgames/sequence_table.hpp"

#include "json.hpp"

namespace heapgames {

// Machine checks for every theorem and lemma, run over a parameter grid.
struct VerifyConfig {
  std::vector<GameParams> grid;  // empty -> s,t in {1..4}^2
  u64 n_max = 1000;              // sequence length for table comparisons
  u64 bound = 150;               // retrograde / exhaustive strategy bound
  u64 increment_max = 100000;    // Lemma 1 sweep upper value
  u64 theorem4_n = 200;
  u64 q1_terms = 500;            // Lemma 3/4 prefix size, in q1 terms
  std::string only;              // restrict to one suite by name

  std::vector<GameParams> effective_grid() const;
};

// Suite names accepted by VerifyConfig::only.
const std::vector<std::string>& verification_suite_names();

std::vector<Report> run_verification(const VerifyConfig& config);

bool all_passed(const std::vector<Report>& reports);
std::string render_text(const std::vector<Report>& reports);
nlohmann::json render_json(const std::vector<Report>& reports);

}  // namespace heapgames
