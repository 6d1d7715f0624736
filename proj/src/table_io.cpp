#include "heapgames/table_io.hpp"

#include <charconv>
#include <sstream>

namespace heapgames {

const char* to_string(TableSource source) {
  switch (source) {
    case TableSource::MexRecurrence: return "MexRecurrence";
    case TableSource::Retrograde: return "Retrograde";
    case TableSource::EvilOld: return "EvilOld";
    case TableSource::QSequences: return "QSequences";
    case TableSource::BeattyClosedForm: return "BeattyClosedForm";
  }
  return "?";
}

TableSource table_source_from_string(const std::string& name) {
  for (TableSource s : {TableSource::MexRecurrence, TableSource::Retrograde, TableSource::EvilOld,
                        TableSource::QSequences, TableSource::BeattyClosedForm})
    if (name == to_string(s)) return s;
  throw std::invalid_argument("unknown table source '" + name + "'");
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

u64 parse_u64(const std::string& field) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::invalid_argument("bad integer field '" + field + "'");
  return v;
}

TailParity parity_from_string(const std::string& name) {
  if (name == "evil") return TailParity::Evil;
  if (name == "old") return TailParity::Old;
  if (name == "both") return TailParity::ZeroBoth;
  throw std::invalid_argument("unknown parity '" + name + "'");
}

void expect_header(const std::vector<std::string>& lines, const std::string& header) {
  if (lines.empty() || lines[0] != header)
    throw std::invalid_argument("expected header '" + header + "'");
}

}  // namespace

ReprTable build_repr_table(const GameParams& params, u64 max_m) {
  ReprTable table{params, {}};
  table.rows.reserve(max_m);
  for (u64 m = 1; m <= max_m; ++m) {
    Representation rep = represent(params, m);
    table.rows.push_back({m, render_digits(params, rep), tail_parity(rep)});
  }
  return table;
}

QTable build_q_table(const GameParams& params, u64 n_max) {
  QTriple triple = q_sequences(params, n_max + 1);
  QTable table{params, {}};
  for (u64 n = 0; n <= n_max; ++n) table.rows.emplace_back(n, triple.q[n]);
  return table;
}

std::string table_to_csv(const SequenceTable& table) {
  std::string out = "n,a,b\n";
  for (const TableRow& row : table.rows)
    out += std::to_string(row.n) + "," + std::to_string(row.a) + "," + std::to_string(row.b) + "\n";
  return out;
}

std::vector<TableRow> table_rows_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  expect_header(lines, "n,a,b");
  std::vector<TableRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i]);
    if (fields.size() != 3) throw std::invalid_argument("bad csv row '" + lines[i] + "'");
    rows.push_back({parse_u64(fields[0]), parse_u64(fields[1]), parse_u64(fields[2])});
  }
  return rows;
}

nlohmann::json table_to_json(const SequenceTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : table.rows) rows.push_back({row.n, row.a, row.b});
  return {{"params", {{"s", table.params.s}, {"t", table.params.t}}},
          {"source", to_string(table.source)},
          {"rows", rows}};
}

SequenceTable table_from_json(const nlohmann::json& j) {
  SequenceTable table{GameParams{j.at("params").at("s").get<u64>(),
                                 j.at("params").at("t").get<u64>()},
                      table_source_from_string(j.at("source").get<std::string>()),
                      {}};
  for (const auto& row : j.at("rows"))
    table.rows.push_back({row.at(0).get<u64>(), row.at(1).get<u64>(), row.at(2).get<u64>()});
  return table;
}

std::string repr_table_to_csv(const ReprTable& table) {
  std::string out = "m,digits,parity\n";
  for (const auto& row : table.rows)
    out += std::to_string(row.m) + "," + row.digits + "," + to_string(row.parity) + "\n";
  return out;
}

std::vector<ReprTable::Row> repr_rows_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  expect_header(lines, "m,digits,parity");
  std::vector<ReprTable::Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i]);
    if (fields.size() != 3) throw std::invalid_argument("bad csv row '" + lines[i] + "'");
    rows.push_back({parse_u64(fields[0]), fields[1], parity_from_string(fields[2])});
  }
  return rows;
}

nlohmann::json repr_table_to_json(const ReprTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) rows.push_back({row.m, row.digits, to_string(row.parity)});
  return {{"params", {{"s", table.params.s}, {"t", table.params.t}}}, {"rows", rows}};
}

ReprTable repr_table_from_json(const nlohmann::json& j) {
  ReprTable table{GameParams{j.at("params").at("s").get<u64>(),
                             j.at("params").at("t").get<u64>()},
                  {}};
  for (const auto& row : j.at("rows"))
    table.rows.push_back({row.at(0).get<u64>(), row.at(1).get<std::string>(),
                          parity_from_string(row.at(2).get<std::string>())});
  return table;
}

std::string q_table_to_csv(const QTable& table) {
  std::string out = "n,q\n";
  for (const auto& [n, q] : table.rows) out += std::to_string(n) + "," + std::to_string(q) + "\n";
  return out;
}

std::vector<std::pair<u64, u64>> q_rows_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  expect_header(lines, "n,q");
  std::vector<std::pair<u64, u64>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i]);
    if (fields.size() != 2) throw std::invalid_argument("bad csv row '" + lines[i] + "'");
    rows.emplace_back(parse_u64(fields[0]), parse_u64(fields[1]));
  }
  return rows;
}

nlohmann::json q_table_to_json(const QTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, q] : table.rows) rows.push_back({n, q});
  return {{"params", {{"s", table.params.s}, {"t", table.params.t}}}, {"rows", rows}};
}

QTable q_table_from_json(const nlohmann::json& j) {
  QTable table{GameParams{j.at("params").at("s").get<u64>(), j.at("params").at("t").get<u64>()},
               {}};
  for (const auto& row : j.at("rows")) table.rows.emplace_back(row.at(0).get<u64>(),
                                                               row.at(1).get<u64>());
  return table;
}

std::string table_to_plain(const SequenceTable& table) {
  std::ostringstream out;
  out << "s=" << table.params.s << " t=" << table.params.t << " source=" << to_string(table.source)
      << "\n";
  out << "   n        A_n        B_n\n";
  for (const TableRow& row : table.rows) {
    out.width(4);
    out << row.n;
    out.width(11);
    out << row.a;
    out.width(11);
    out << row.b << "\n";
  }
  return out.str();
}

std::string repr_table_to_plain(const ReprTable& table) {
  std::ostringstream out;
  out << "s=" << table.params.s << " t=" << table.params.t << "\n";
  out << "   m  representation  parity\n";
  for (const auto& row : table.rows) {
    out.width(4);
    out << row.m << "  ";
    out.width(14);
    out << row.digits << "  " << to_string(row.parity) << "\n";
  }
  return out.str();
}

std::string q_triple_to_plain(const QTriple& triple) {
  std::ostringstream out;
  out << "s=" << triple.params.s << " t=" << triple.params.t << "\n";
  auto emit_row = [&out](const char* label, const std::vector<u64>& vals) {
    out << label;
    for (u64 v : vals) out << " " << v;
    out << "\n";
  };
  emit_row("Q  :", triple.q);
  emit_row("A' :", triple.a_prime);
  emit_row("B' :", triple.b_prime);
  emit_row("Q1 :", triple.q1_indices);
  emit_row("Q2 :", triple.q2_indices);
  return out.str();
}

nlohmann::json quasilinearity_to_json(const QuasilinearityReport& rep) {
  return {{"params", {{"s", rep.params.s}, {"t", rep.params.t}}},
          {"n_max", rep.n_max},
          {"i_max", rep.i_max},
          {"max_spread", rep.max_spread},
          {"witness", {{"i", rep.witness_i}, {"n", rep.witness_n}, {"m", rep.witness_m}}},
          {"exploratory", rep.exploratory}};
}

}  // namespace heapgames
