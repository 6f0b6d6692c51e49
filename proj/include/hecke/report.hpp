#pragma once

// CSV and JSON output for the command-line tool. Records are flat
// (key, value) lists; the key order of the first record is the column order.

#include "hecke/real.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hecke::report {

enum class Format { csv, json };

Format parse_format(const std::string& s);

using Cell = std::variant<long, double, Real, std::string, bool>;

struct Record {
    std::vector<std::pair<std::string, Cell>> fields;

    Record& add(std::string key, Cell value);
    const Cell* find(const std::string& key) const;
};

/// Decimal scientific notation with `digits` significant figures (at most 17 for doubles).
std::string sci(double x, int digits);
std::string sci(const Real& x, int digits);

/// CSV: header row, one line per record, '\n' line ends.
/// JSON: an array of flat objects; Real values are strings so no digits are lost.
void write(std::ostream& os, const std::vector<Record>& records, Format fmt, int digits);
std::string to_string(const std::vector<Record>& records, Format fmt, int digits);

}  // namespace hecke::report
