#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elra {

/// Full-precision (%.17g) text form of a double; round-trips exactly and is
/// byte-stable across runs of the same binary. Decimal separator is always
/// the period regardless of locale.
std::string format_double(double v);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace elra
