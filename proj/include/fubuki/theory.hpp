#pragma once

// Shift structure of full-diagonal Fubuki solutions.
//
// Two solutions sharing a diagonal and all six line sums differ by a single
// integer shift a: cells (1,2), (2,3), (3,1) gain a and cells (1,3), (2,1),
// (3,2) lose a. Such a shift keeps the grid valid exactly when the six
// off-diagonal values X can be split into three pairs {y, y + a} with the
// lower ends {y} sitting on the "+a" cells.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fubuki/core.hpp"

namespace fubuki {

/// Nonzero shift in -8..8.
class ShiftParameter {
 public:
  explicit ShiftParameter(int a) : a_(a) {
    if (a == 0 || a < -8 || a > 8)
      throw std::invalid_argument("shift must be a nonzero integer in -8..8, got " +
                                  std::to_string(a));
  }

  int value() const noexcept { return a_; }
  int magnitude() const noexcept { return std::abs(a_); }
  ShiftParameter negated() const noexcept { return ShiftParameter(-a_); }

  friend auto operator<=>(const ShiftParameter&, const ShiftParameter&) = default;

 private:
  int a_;
};

/// Every nonzero shift, ascending: -8..-1, 1..8.
inline std::vector<ShiftParameter> all_shifts() {
  std::vector<ShiftParameter> out;
  for (int a = -8; a <= 8; ++a)
    if (a != 0) out.emplace_back(a);
  return out;
}

// Cells that gain a under the shift, and those that lose it (row-major index).
inline constexpr std::array<int, 3> kPlusCells = {1, 5, 6};   // (1,2) (2,3) (3,1)
inline constexpr std::array<int, 3> kMinusCells = {2, 3, 7};  // (1,3) (2,1) (3,2)
inline constexpr std::array<int, 3> kDiagonalCells = {0, 4, 8};

/// The six values off the diagonal; the complement of a DiagonalSet.
class OffDiagonalSet {
 public:
  explicit OffDiagonalSet(ValueMask mask) : mask_(mask) {
    if ((mask & ~kAllValues) != 0 || std::popcount(static_cast<unsigned>(mask)) != 6)
      throw std::invalid_argument("off-diagonal set must hold exactly 6 values in 1..9");
  }

  static OffDiagonalSet complement_of(const DiagonalSet& d) {
    return OffDiagonalSet(static_cast<ValueMask>(kAllValues & ~d.mask()));
  }

  static OffDiagonalSet of(const Grid& g) {
    return complement_of(DiagonalSet::of(g));
  }

  ValueMask mask() const noexcept { return mask_; }
  bool contains(int v) const noexcept { return is_cell_value(v) && (mask_ & value_bit(v)); }

  std::array<int, 6> values() const noexcept {
    std::array<int, 6> out{};
    int n = 0;
    for (int v = 1; v <= 9; ++v)
      if (mask_ & value_bit(v)) out[n++] = v;
    return out;
  }

  friend auto operator<=>(const OffDiagonalSet&, const OffDiagonalSet&) = default;

 private:
  ValueMask mask_;
};

/// Three values y1 < y2 < y3 with {y1, y1+a, y2, y2+a, y3, y3+a} equal to the
/// off-diagonal set they were extracted from.
struct Triplet {
  std::array<int, 3> y{};
  ShiftParameter shift{1};

  ValueMask mask() const noexcept {
    return static_cast<ValueMask>(value_bit(y[0]) | value_bit(y[1]) | value_bit(y[2]));
  }

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Raw S_a candidate; entries may leave 1..9 or collide.
using CandidateGrid = std::array<int, kCells>;

inline CandidateGrid shift_grid(const Grid& s0, ShiftParameter a) noexcept {
  CandidateGrid out = s0.to_array();
  for (int i : kPlusCells) out[i] += a.value();
  for (int i : kMinusCells) out[i] -= a.value();
  return out;
}

/// Direct set-equality test: the six shifted off-diagonal entries must be
/// exactly the six original ones.
inline bool is_valid_shift(const Grid& s0, ShiftParameter a) noexcept {
  const CandidateGrid cand = shift_grid(s0, a);
  ValueMask shifted = 0;
  for (int i : kPlusCells) {
    if (!is_cell_value(cand[i])) return false;
    shifted |= value_bit(cand[i]);
  }
  for (int i : kMinusCells) {
    if (!is_cell_value(cand[i])) return false;
    shifted |= value_bit(cand[i]);
  }
  return shifted == OffDiagonalSet::of(s0).mask();
}

namespace detail {

// Greedy pairing for a > 0: repeatedly take the smallest unpaired value and
// pair it with value + a.
inline std::optional<std::array<int, 3>> lower_ends(ValueMask remaining, int a) noexcept {
  std::array<int, 3> y{};
  for (int k = 0; k < 3; ++k) {
    const int lo = std::countr_zero(static_cast<unsigned>(remaining)) + 1;
    const int hi = lo + a;
    if (!is_cell_value(hi) || !(remaining & value_bit(hi))) return std::nullopt;
    remaining = static_cast<ValueMask>(remaining & ~(value_bit(lo) | value_bit(hi)));
    y[k] = lo;
  }
  return y;
}

}  // namespace detail

/// The unique triplet for shift a, if X pairs up under it.
///
/// For a < 0 the pairs {y, y + a} have y as the upper end, so the triplet is
/// the positive-shift triplet moved up by |a|.
inline std::optional<Triplet> find_triplet(const OffDiagonalSet& x, ShiftParameter a) noexcept {
  const auto lows = detail::lower_ends(x.mask(), a.magnitude());
  if (!lows) return std::nullopt;
  Triplet t{*lows, a};
  if (a.value() < 0)
    for (int& v : t.y) v += a.magnitude();
  return t;
}

/// Positive shifts c for which the complement of d pairs up.
inline std::vector<int> possible_shifts(const DiagonalSet& d) {
  const auto x = OffDiagonalSet::complement_of(d);
  std::vector<int> out;
  for (int c = 1; c <= 8; ++c)
    if (find_triplet(x, ShiftParameter(c))) out.push_back(c);
  return out;
}

struct DiagonalClass {
  DiagonalSet diagonal;
  std::vector<int> shifts;
  bool in_dr = false;       // no shift at all: a solution, if any, is unique
  int max_solutions = 1;    // 1 or 2
};

inline DiagonalClass classify_diagonal(const DiagonalSet& d) {
  DiagonalClass out{d, possible_shifts(d)};
  out.in_dr = out.shifts.empty();
  out.max_solutions = out.in_dr ? 1 : 2;
  return out;
}

struct ShiftTableRow {
  DiagonalSet diagonal;
  std::vector<int> shifts;

  friend bool operator==(const ShiftTableRow&, const ShiftTableRow&) = default;
};

using ShiftTable = std::vector<ShiftTableRow>;

/// possible_shifts for all 84 diagonal sets, lexicographic by diagonal.
/// Throws std::logic_error if any diagonal admits more than two shifts.
inline ShiftTable build_shift_table() {
  ShiftTable table;
  table.reserve(84);
  for (const auto& d : all_diagonal_sets()) {
    auto shifts = possible_shifts(d);
    if (shifts.size() > 2)
      throw std::logic_error("diagonal admits more than two positive shifts");
    table.push_back({d, std::move(shifts)});
  }
  return table;
}

/// True when the lower/upper ends of the triplet land on the "+a" cells,
/// which is exactly when S_a is another solution.
inline bool triplet_on_plus_cells(const Grid& s0, const Triplet& t) noexcept {
  ValueMask plus = 0;
  for (int i : kPlusCells) plus |= value_bit(s0[i]);
  return plus == t.mask();
}

/// Every other grid with s0's diagonal and line sums, ascending.
inline std::vector<Grid> companion_solutions(const Grid& s0) {
  const auto diag = DiagonalSet::of(s0);
  const auto x = OffDiagonalSet::complement_of(diag);
  std::vector<Grid> out;
  for (int c : possible_shifts(diag)) {
    for (int a : {c, -c}) {
      const auto t = find_triplet(x, ShiftParameter(a));
      if (t && triplet_on_plus_cells(s0, *t))
        out.push_back(Grid(shift_grid(s0, ShiftParameter(a))));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fubuki
