#pragma once

// Grid and clue types for 3x3 Fubuki puzzles (values 1..9, each used once).
//
// Cells are addressed 0-based internally (row * 3 + col). All user-facing
// text uses 1-based (row, col); the conversion happens in io.hpp.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fubuki {

inline constexpr int kSide = 3;
inline constexpr int kCells = 9;
inline constexpr int kTotal = 45;  // 1 + 2 + ... + 9
inline constexpr int kMinLineSum = 6;   // 1 + 2 + 3
inline constexpr int kMaxLineSum = 24;  // 7 + 8 + 9

using Sums = std::array<int, kSide>;

constexpr bool is_cell_value(int v) noexcept { return v >= 1 && v <= 9; }

/// Bit (v - 1) set for every value v in the mask.
using ValueMask = std::uint16_t;
inline constexpr ValueMask kAllValues = 0x1FF;

constexpr ValueMask value_bit(int v) noexcept {
  return static_cast<ValueMask>(1u << (v - 1));
}

/// A complete arrangement of 1..9 on the 3x3 board, stored row-major.
class Grid {
 public:
  using Cells = std::array<std::uint8_t, kCells>;

  /// Throws std::invalid_argument unless `cells` is a permutation of 1..9.
  explicit Grid(const std::array<int, kCells>& cells) {
    ValueMask seen = 0;
    for (int i = 0; i < kCells; ++i) {
      const int v = cells[i];
      if (!is_cell_value(v))
        throw std::invalid_argument("grid value out of range 1..9: " + std::to_string(v));
      if (seen & value_bit(v))
        throw std::invalid_argument("grid value repeated: " + std::to_string(v));
      seen |= value_bit(v);
      cells_[i] = static_cast<std::uint8_t>(v);
    }
  }

  static Grid from_rows(const std::array<std::array<int, kSide>, kSide>& rows) {
    std::array<int, kCells> flat{};
    for (int r = 0; r < kSide; ++r)
      for (int c = 0; c < kSide; ++c) flat[r * kSide + c] = rows[r][c];
    return Grid(flat);
  }

  /// Accepts any 3x3 integer array; empty if it is not a permutation of 1..9.
  static std::optional<Grid> try_make(const std::array<int, kCells>& cells) noexcept {
    ValueMask seen = 0;
    for (int v : cells) {
      if (!is_cell_value(v) || (seen & value_bit(v))) return std::nullopt;
      seen |= value_bit(v);
    }
    return Grid(cells, Unchecked{});
  }

  int at(int row, int col) const noexcept { return cells_[row * kSide + col]; }
  int operator[](int index) const noexcept { return cells_[index]; }
  const Cells& cells() const noexcept { return cells_; }

  std::array<int, kCells> to_array() const noexcept {
    std::array<int, kCells> out{};
    std::copy(cells_.begin(), cells_.end(), out.begin());
    return out;
  }

  friend auto operator<=>(const Grid&, const Grid&) = default;

 private:
  struct Unchecked {};
  Grid(const std::array<int, kCells>& cells, Unchecked) noexcept {
    for (int i = 0; i < kCells; ++i) cells_[i] = static_cast<std::uint8_t>(cells[i]);
  }

  Cells cells_{};
};

inline Sums row_sums(const Grid& g) noexcept {
  Sums s{};
  for (int r = 0; r < kSide; ++r) s[r] = g.at(r, 0) + g.at(r, 1) + g.at(r, 2);
  return s;
}

inline Sums col_sums(const Grid& g) noexcept {
  Sums s{};
  for (int c = 0; c < kSide; ++c) s[c] = g.at(0, c) + g.at(1, c) + g.at(2, c);
  return s;
}

/// A revealed cell. Row and column are 0-based.
struct Prescribed {
  int row = 0;
  int col = 0;
  int value = 0;

  friend auto operator<=>(const Prescribed&, const Prescribed&) = default;
};

/// Prescribed cells plus the six line sums.
///
/// Line sums must each lie in 6..24. Their totals are not required to be 45;
/// such a clue set is a legal value with no solutions.
class ClueSet {
 public:
  ClueSet(std::vector<Prescribed> prescribed, Sums rows, Sums cols)
      : prescribed_(std::move(prescribed)), row_sums_(rows), col_sums_(cols) {
    int positions = 0;
    ValueMask values = 0;
    for (const auto& p : prescribed_) {
      if (p.row < 0 || p.row >= kSide || p.col < 0 || p.col >= kSide)
        throw std::invalid_argument("prescribed cell outside the 3x3 board");
      if (!is_cell_value(p.value))
        throw std::invalid_argument("prescribed value out of range 1..9: " +
                                    std::to_string(p.value));
      const int bit = 1 << (p.row * kSide + p.col);
      if (positions & bit)
        throw std::invalid_argument("cell (" + std::to_string(p.row + 1) + "," +
                                    std::to_string(p.col + 1) + ") prescribed twice");
      if (values & value_bit(p.value))
        throw std::invalid_argument("value " + std::to_string(p.value) + " prescribed twice");
      positions |= bit;
      values |= value_bit(p.value);
    }
    for (int s : row_sums_) check_line_sum(s, "row");
    for (int s : col_sums_) check_line_sum(s, "column");
    std::sort(prescribed_.begin(), prescribed_.end());
  }

  /// Sorted by (row, col).
  const std::vector<Prescribed>& prescribed() const noexcept { return prescribed_; }
  const Sums& row_sums() const noexcept { return row_sums_; }
  const Sums& col_sums() const noexcept { return col_sums_; }

  std::optional<int> value_at(int row, int col) const noexcept {
    for (const auto& p : prescribed_)
      if (p.row == row && p.col == col) return p.value;
    return std::nullopt;
  }

  friend bool operator==(const ClueSet&, const ClueSet&) = default;

 private:
  static void check_line_sum(int s, const char* what) {
    if (s < kMinLineSum || s > kMaxLineSum)
      throw std::invalid_argument(std::string(what) + " sum " + std::to_string(s) +
                                  " outside 6..24");
  }

  std::vector<Prescribed> prescribed_;
  Sums row_sums_{};
  Sums col_sums_{};
};

inline bool satisfies(const Grid& g, const ClueSet& c) noexcept {
  for (const auto& p : c.prescribed())
    if (g.at(p.row, p.col) != p.value) return false;
  return row_sums(g) == c.row_sums() && col_sums(g) == c.col_sums();
}

/// Which diagonal cells a puzzle reveals.
enum class Regime : std::uint8_t { FullDiagonal, FirstTwoDiagonal, TopLeft, None };

inline constexpr std::array<Regime, 4> kAllRegimes = {
    Regime::FullDiagonal, Regime::FirstTwoDiagonal, Regime::TopLeft, Regime::None};

/// Number of leading diagonal cells revealed by the regime.
constexpr int revealed_diagonal_cells(Regime r) noexcept {
  switch (r) {
    case Regime::FullDiagonal: return 3;
    case Regime::FirstTwoDiagonal: return 2;
    case Regime::TopLeft: return 1;
    case Regime::None: return 0;
  }
  return 0;
}

/// Snake-case name used in JSON reports.
constexpr std::string_view regime_id(Regime r) noexcept {
  switch (r) {
    case Regime::FullDiagonal: return "full_diagonal";
    case Regime::FirstTwoDiagonal: return "first_two_diagonal";
    case Regime::TopLeft: return "top_left";
    case Regime::None: return "none";
  }
  return "";
}

/// Kebab-case name used on the command line.
constexpr std::string_view regime_flag(Regime r) noexcept {
  switch (r) {
    case Regime::FullDiagonal: return "full-diagonal";
    case Regime::FirstTwoDiagonal: return "first-two-diagonal";
    case Regime::TopLeft: return "top-left";
    case Regime::None: return "none";
  }
  return "";
}

/// Accepts either the flag or the id spelling.
inline std::optional<Regime> parse_regime(std::string_view s) noexcept {
  for (Regime r : kAllRegimes)
    if (s == regime_flag(r) || s == regime_id(r)) return r;
  return std::nullopt;
}

inline ClueSet clue_of(const Grid& g, Regime regime) {
  std::vector<Prescribed> cells;
  for (int i = 0; i < revealed_diagonal_cells(regime); ++i) cells.push_back({i, i, g.at(i, i)});
  return ClueSet(std::move(cells), row_sums(g), col_sums(g));
}

/// Three distinct values, kept sorted ascending.
class DiagonalSet {
 public:
  DiagonalSet(int a, int b, int c) {
    values_ = {a, b, c};
    std::sort(values_.begin(), values_.end());
    for (int v : values_)
      if (!is_cell_value(v))
        throw std::invalid_argument("diagonal value out of range 1..9: " + std::to_string(v));
    if (values_[0] == values_[1] || values_[1] == values_[2])
      throw std::invalid_argument("diagonal values must be distinct");
  }

  static DiagonalSet of(const Grid& g) { return DiagonalSet(g.at(0, 0), g.at(1, 1), g.at(2, 2)); }

  const std::array<int, 3>& values() const noexcept { return values_; }

  ValueMask mask() const noexcept {
    return static_cast<ValueMask>(value_bit(values_[0]) | value_bit(values_[1]) |
                                  value_bit(values_[2]));
  }

  bool contains(int v) const noexcept {
    return std::find(values_.begin(), values_.end(), v) != values_.end();
  }

  friend auto operator<=>(const DiagonalSet&, const DiagonalSet&) = default;

 private:
  std::array<int, 3> values_{};
};

/// All 84 three-element subsets of 1..9 in lexicographic order.
inline std::vector<DiagonalSet> all_diagonal_sets() {
  std::vector<DiagonalSet> out;
  out.reserve(84);
  for (int a = 1; a <= 9; ++a)
    for (int b = a + 1; b <= 9; ++b)
      for (int c = b + 1; c <= 9; ++c) out.emplace_back(a, b, c);
  return out;
}

}  // namespace fubuki
