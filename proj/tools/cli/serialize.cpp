#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chebdyn::cli {
namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Null>) return "";
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, Integer>) return v.digits;
        else if constexpr (std::is_same_v<T, double>) return format_double(v, 12);
        else if constexpr (std::is_same_v<T, std::string>) return csv_escape(v);
        else return csv_escape(join(v, ';'));
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Null>) return nullptr;
        else if constexpr (std::is_same_v<T, Integer>) return v.digits;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else return v;
      },
      c);
}

}  // namespace

std::string format_double(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Cell big(const BigInt& n) { return Integer{n.get_str()}; }

Cell list(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv or json)");
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)), kinds_(columns_.size(), kUnset) {}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("record has " + std::to_string(row.size()) + " fields, table has " +
                           std::to_string(columns_.size()));
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (std::holds_alternative<Null>(row[i])) continue;
    if (kinds_[i] == kUnset) {
      kinds_[i] = row[i].index();
    } else if (kinds_[i] != row[i].index()) {
      throw std::logic_error("heterogeneous records in column '" + columns_[i] + "'");
    }
  }
  rows_.push_back(std::move(row));
}

void Table::write(std::ostream& os, Format format) const {
  if (format == Format::csv) {
    os << join(columns_, ',') << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  // Hand-assembled so floats carry 17 significant digits.
  os << "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      os << (i ? ", " : "") << nlohmann::json(columns_[i]).dump() << ": ";
      const Cell& c = rows_[r][i];
      if (const auto* d = std::get_if<double>(&c); d && std::isfinite(*d)) {
        // Keep a float marker so 2.0 does not come back as an integer.
        std::string s = format_double(*d, 17);
        if (s.find_first_of(".e") == std::string::npos) s += ".0";
        os << s;
      } else {
        os << json_cell(c).dump();
      }
    }
    os << "}";
  }
  os << (rows_.empty() ? "]\n" : "\n]\n");
}

std::string Table::to_string(Format format) const {
  std::ostringstream os;
  write(os, format);
  return os.str();
}

Table Table::from_json(const std::string& text, const Table& layout) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("expected a JSON array of records");
  const std::size_t integer_kind = Cell(Integer{}).index();
  Table t(layout.columns_);
  for (const auto& obj : doc) {
    std::vector<Cell> row;
    for (std::size_t i = 0; i < layout.columns_.size(); ++i) {
      const auto& v = obj.at(layout.columns_[i]);
      if (v.is_null()) row.emplace_back(Null{});
      else if (v.is_boolean()) row.emplace_back(v.get<bool>());
      else if (v.is_number_integer()) row.emplace_back(v.get<std::int64_t>());
      else if (v.is_number_float()) row.emplace_back(v.get<double>());
      else if (v.is_array()) row.emplace_back(v.get<std::vector<std::string>>());
      else if (layout.kinds_[i] == integer_kind) row.emplace_back(Integer{v.get<std::string>()});
      else row.emplace_back(v.get<std::string>());
    }
    t.add(std::move(row));
  }
  return t;
}

}  // namespace chebdyn::cli
