#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kummerlab {

/// Quotes a field when it contains a comma, quote, CR or LF; quotes are doubled.
std::string csv_escape(std::string_view field);

/// Decimal with 12 significant digits.
std::string fmt_real(long double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace kummerlab
