#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace beurling::experiments {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void add(std::vector<Cell> row);
};

/// RFC 4180 text: header row, doubles with 12 significant digits, "\n" line
/// ends. Throws beurling::NumericalError on a non-finite cell.
std::string to_csv(const Table& table);

/// Writes to_csv(table); throws std::runtime_error when the path is not
/// writable. Nothing is written when the table holds a non-finite value.
void write_csv(const Table& table, const std::string& path);

}  // namespace beurling::experiments
