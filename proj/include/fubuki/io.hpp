#pragma once

// Text formats: puzzle and grid JSON, census report JSON, shift table CSV and
// JSON, and the boxed rendering used by `solve --pretty`.
//
// Rows and columns are 1-based in every format here.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fubuki/census.hpp"
#include "fubuki/core.hpp"
#include "fubuki/theory.hpp"

namespace fubuki {

using Json = nlohmann::json;

/// Malformed input; the message names the offending field or line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

inline Sums expect_sums(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const Json& arr = obj.at(key);
  if (!arr.is_array() || arr.size() != 3)
    throw ParseError(std::string(key) + ": expected an array of 3 integers");
  Sums s{};
  for (int i = 0; i < 3; ++i)
    s[i] = expect_int(arr[i], std::string(key) + "[" + std::to_string(i) + "]");
  return s;
}

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline Json to_json(const Grid& g) {
  Json rows = Json::array();
  for (int r = 0; r < kSide; ++r) rows.push_back({g.at(r, 0), g.at(r, 1), g.at(r, 2)});
  return Json{{"cells", rows}};
}

inline Json to_json(const ClueSet& c) {
  Json cells = Json::array();
  for (const auto& p : c.prescribed())
    cells.push_back({{"row", p.row + 1}, {"col", p.col + 1}, {"value", p.value}});
  return Json{{"prescribed", cells}, {"row_sums", c.row_sums()}, {"col_sums", c.col_sums()}};
}

inline Json to_json(const CensusReport& r) {
  Json hist = Json::object();
  for (const auto& [size, grids] : r.histogram) hist[std::to_string(size)] = grids;
  return Json{{"regime", regime_id(r.regime)},
              {"total", r.total_grids},
              {"histogram", hist},
              {"unique", r.unique_count},
              {"single_solution_grids", r.single_solution_grids}};
}

inline Grid grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells")) throw ParseError("missing field 'cells'");
  const Json& rows = j.at("cells");
  if (!rows.is_array() || rows.size() != 3) throw ParseError("cells: expected 3 rows");
  std::array<int, kCells> flat{};
  for (int r = 0; r < 3; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 3)
      throw ParseError("cells[" + std::to_string(r) + "]: expected 3 values");
    for (int c = 0; c < 3; ++c)
      flat[r * 3 + c] =
          detail::expect_int(rows[r][c], "cells[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  try {
    return Grid(flat);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cells: ") + e.what());
  }
}

inline ClueSet puzzle_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("puzzle: expected a JSON object");
  std::vector<Prescribed> cells;
  if (j.contains("prescribed")) {
    const Json& arr = j.at("prescribed");
    if (!arr.is_array()) throw ParseError("prescribed: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "prescribed[" + std::to_string(i) + "]";
      const Json& e = arr[i];
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      for (const char* key : {"row", "col", "value"})
        if (!e.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
      const int row = detail::expect_int(e.at("row"), where + ".row");
      const int col = detail::expect_int(e.at("col"), where + ".col");
      if (row < 1 || row > 3) throw ParseError(where + ".row: must be 1..3");
      if (col < 1 || col > 3) throw ParseError(where + ".col: must be 1..3");
      cells.push_back({row - 1, col - 1, detail::expect_int(e.at("value"), where + ".value")});
    }
  }
  const Sums rows = detail::expect_sums(j, "row_sums");
  const Sums cols = detail::expect_sums(j, "col_sums");
  try {
    return ClueSet(std::move(cells), rows, cols);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline ClueSet puzzle_from_text(std::string_view text) {
  return puzzle_from_json(detail::parse_text(text));
}

inline Grid grid_from_text(std::string_view text) { return grid_from_json(detail::parse_text(text)); }

// Shift table CSV: header "diagonal,shifts", one quoted row per diagonal, e.g.
//   "1,2,3","1,3"
//   "1,3,4",""

namespace detail {

inline std::string join(const auto& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

inline std::vector<int> split_ints(std::string_view s, const std::string& where) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    const auto part = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    if (part.empty() || part.size() > 2)
      throw ParseError(where + ": bad integer list '" + std::string(s) + "'");
    int v = 0;
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError(where + ": bad integer list '" + std::string(s) + "'");
      v = v * 10 + (ch - '0');
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Splits one CSV record into fields, honouring double quotes.
inline std::vector<std::string> csv_fields(std::string_view line, const std::string& where) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) throw ParseError(where + ": unterminated quote");
  return out;
}

}  // namespace detail

inline std::string shift_table_csv(const ShiftTable& table) {
  std::string out = "diagonal,shifts\n";
  for (const auto& row : table)
    out += '"' + detail::join(row.diagonal.values()) + "\",\"" + detail::join(row.shifts) + "\"\n";
  return out;
}

inline ShiftTable shift_table_from_csv(std::string_view csv) {
  ShiftTable table;
  std::istringstream in{std::string(csv)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (lineno == 1) {
      if (line != "diagonal,shifts") throw ParseError(where + ": expected header 'diagonal,shifts'");
      continue;
    }
    const auto fields = detail::csv_fields(line, where);
    if (fields.size() != 2) throw ParseError(where + ": expected 2 fields");
    const auto diag = detail::split_ints(fields[0], where);
    if (diag.size() != 3) throw ParseError(where + ": diagonal needs 3 values");
    try {
      table.push_back({DiagonalSet(diag[0], diag[1], diag[2]), detail::split_ints(fields[1], where)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return table;
}

inline Json to_json(const ShiftTable& table) {
  Json rows = Json::array();
  for (const auto& row : table)
    rows.push_back({{"diagonal", row.diagonal.values()}, {"shifts", row.shifts}});
  return rows;
}

/// Boxed grid with row sums in the right margin and column sums underneath.
/// Prescribed cells are wrapped in brackets.
inline std::string render_pretty(const Grid& g, const ClueSet& clues) {
  std::ostringstream out;
  const std::string rule = "+-----+-----+-----+\n";
  const auto rows = row_sums(g);
  const auto cols = col_sums(g);
  out << rule;
  for (int r = 0; r < kSide; ++r) {
    out << '|';
    for (int c = 0; c < kSide; ++c) {
      if (clues.value_at(r, c))
        out << " [" << g.at(r, c) << "] |";
      else
        out << "  " << g.at(r, c) << "  |";
    }
    out << " =" << rows[r] << '\n' << rule;
  }
  std::string footer;
  for (int c = 0; c < kSide; ++c) {
    footer += "  =" + std::to_string(cols[c]);
    footer.resize(6 * (c + 1), ' ');
  }
  footer.erase(footer.find_last_not_of(' ') + 1);
  out << footer << '\n';
  return out.str();
}

}  // namespace fubuki
