#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heapgames/analysis.hpp"
#include "heapgames/numeration.hpp"
#include "heapgames/sequence_table.hpp"

#include "json.hpp"

namespace heapgames {

// Representations of 1..max_m with their digit strings and tail parities.
struct ReprTable {
  struct Row {
    u64 m = 0;
    std::string digits;
    TailParity parity = TailParity::Evil;

    bool operator==(const Row&) const = default;
  };

  GameParams params;
  std::vector<Row> rows;

  bool operator==(const ReprTable&) const = default;
};

// The raw Q sequence as (n, Q_n) rows.
struct QTable {
  GameParams params;
  std::vector<std::pair<u64, u64>> rows;

  bool operator==(const QTable&) const = default;
};

ReprTable build_repr_table(const GameParams& params, u64 max_m);
QTable build_q_table(const GameParams& params, u64 n_max);

// csv: header "n,a,b". json: {"params":{"s":..,"t":..},"source":..,"rows":[[n,a,b],..]}.
std::string table_to_csv(const SequenceTable& table);
std::vector<TableRow> table_rows_from_csv(const std::string& text);
nlohmann::json table_to_json(const SequenceTable& table);
SequenceTable table_from_json(const nlohmann::json& j);

// csv: header "m,digits,parity".
std::string repr_table_to_csv(const ReprTable& table);
std::vector<ReprTable::Row> repr_rows_from_csv(const std::string& text);
nlohmann::json repr_table_to_json(const ReprTable& table);
ReprTable repr_table_from_json(const nlohmann::json& j);

// csv: header "n,q".
std::string q_table_to_csv(const QTable& table);
std::vector<std::pair<u64, u64>> q_rows_from_csv(const std::string& text);
nlohmann::json q_table_to_json(const QTable& table);
QTable q_table_from_json(const nlohmann::json& j);

std::string table_to_plain(const SequenceTable& table);
std::string repr_table_to_plain(const ReprTable& table);
// Table-3 style layout: Q with the q1/q2 split plus the A'/B' prefixes.
std::string q_triple_to_plain(const QTriple& triple);

nlohmann::json quasilinearity_to_json(const QuasilinearityReport& rep);

}  // namespace heapgames
