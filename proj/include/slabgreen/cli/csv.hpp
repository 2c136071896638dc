#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace slabgreen::cli {

/// Empty, a real number, an integer, or text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, general notation, "." separator, independent of
/// locale. NaN prints as "nan".
std::string format_double(double v);

/// Header line then one line per row, '\n' terminated. Text cells containing
/// ',', '"' or a newline are quoted.
void write_csv(std::ostream& out, const Table& table);

std::string to_csv(const Table& table);

}  // namespace slabgreen::cli
