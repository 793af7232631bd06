// csv.hpp — rectangular numeric tables with `#` metadata comments, rendered
// with 17 significant digits so every value parses back to the same double.

#pragma once

#include <string>
#include <vector>

namespace cdd {

struct CsvTable {
  std::vector<std::string> comments;  // emitted first, each prefixed with "# "
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string to_string() const;
};

// Locale-independent shortest-faithful rendering (17 significant digits).
std::string format_double(double value);

}  // namespace cdd
