#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dicke3 {

/// 12 significant digits, '.' separator, negative zero printed as 0.
std::string format_number(double v);

/// Small in-memory table written as comma-separated text with LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }

  void add_row(const std::vector<double>& values);
  /// Row of already formatted cells.
  void add_cells(std::vector<std::string> cells);

  void write(std::ostream& os) const;
  /// Throws IoError when the file cannot be written.
  void save(const std::filesystem::path& path) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Splits one CSV line on commas (no quoting support; none of our files need it).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace dicke3
