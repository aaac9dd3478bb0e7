#pragma once

#include <string>
#include <vector>

namespace hypwalk {

/// A parsed CSV file with a mandatory header row. Cells are kept as text;
/// numeric_column converts on demand.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  static CsvTable parse(const std::string& content);
  static CsvTable load(const std::string& path);

  /// Index of a named column; UsageError when missing.
  std::size_t column_index(const std::string& name) const;

  /// The column as doubles; UsageError on non-numeric cells.
  std::vector<double> numeric_column(const std::string& name) const;
};

}  // namespace hypwalk
