#pragma once

#include <string>
#include <vector>

#include "heapgames/game.hpp"

namespace heapgames {

// Which construction produced an (n, A_n, B_n) table.
enum class TableSource {
  MexRecurrence,
  Retrograde,
  EvilOld,
  QSequences,
  BeattyClosedForm,
};

const char* to_string(TableSource source);
TableSource table_source_from_string(const std::string& name);

struct TableRow {
  u64 n = 0;
  u64 a = 0;
  u64 b = 0;

  bool operator==(const TableRow&) const = default;
};

struct SequenceTable {
  GameParams params;
  TableSource source = TableSource::MexRecurrence;
  std::vector<TableRow> rows;

  bool operator==(const SequenceTable&) const = default;
};

}  // namespace heapgames
