#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nnc::cli {

/// Shortest round-trip decimal form ("inf", "-inf" and "nan" for
/// non-finite values). Locale independent.
std::string format_double(double value);

/// Writes comma-separated rows terminated by '\n'. Fields are written
/// verbatim except that fields containing ',' or '"' are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace nnc::cli
