#pragma once

// Homogeneous record tables and their CSV / JSON encodings.
//
// CSV: fixed header, floats at 12 significant digits, lists joined by ';'.
// JSON: array of objects with the same field names; floats keep 17
// significant digits so a re-parse recovers the same doubles, and exact
// integers travel as decimal strings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "chebdyn/rational.hpp"

namespace chebdyn::cli {

struct Null {
  friend bool operator==(Null, Null) { return true; }
};

// Integer: exact decimal (arbitrary size). Text covers rationals too.
struct Integer {
  std::string digits;
  friend bool operator==(const Integer&, const Integer&) = default;
};

using Cell = std::variant<Null, bool, std::int64_t, Integer, double, std::string, std::vector<std::string>>;

Cell big(const BigInt& n);
Cell list(const std::vector<BigInt>& values);

enum class Format { csv, json };
Format parse_format(const std::string& text);

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  // Throws std::logic_error on a width mismatch or when a column changes
  // kind (Null is allowed anywhere).
  void add(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  void write(std::ostream& os, Format format) const;
  std::string to_string(Format format) const;

  // Inverse of the JSON encoding. Strings are read back as Integer or text
  // according to the column kinds of `layout`.
  static Table from_json(const std::string& text, const Table& layout);

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<std::size_t> kinds_;  // variant index per column, npos until seen
  std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double x, int digits);

}  // namespace chebdyn::cli
