#pragma once

// Exhaustive solver for arbitrary clue sets.
//
// Free cells are filled in row-major order with the unused values tried in
// ascending order, so solutions come out in lexicographic order.

#include <array>
#include <bit>
#include <cstddef>
#include <optional>
#include <vector>

#include "fubuki/core.hpp"

namespace fubuki {

struct SolveOptions {
  std::optional<std::size_t> limit;  // stop after this many solutions
  bool prune = true;                 // partial line-sum pruning
};

struct SolveResult {
  std::vector<Grid> solutions;
  std::size_t count = 0;
  bool truncated = false;
};

namespace detail {

class Search {
 public:
  Search(const ClueSet& clues, const SolveOptions& opts, std::vector<Grid>* sink)
      : clues_(clues), opts_(opts), sink_(sink) {}

  std::pair<std::size_t, bool> run() {
    int total_rows = 0, total_cols = 0;
    for (int s : clues_.row_sums()) total_rows += s;
    for (int s : clues_.col_sums()) total_cols += s;
    if (total_rows != kTotal || total_cols != kTotal) return {0, false};

    ValueMask used = 0;
    for (const auto& p : clues_.prescribed()) {
      const int i = p.row * kSide + p.col;
      cells_[i] = p.value;
      fixed_[i] = true;
      used |= value_bit(p.value);
      row_sum_[p.row] += p.value;
      col_sum_[p.col] += p.value;
    }
    for (int i = 0; i < kCells; ++i) {
      if (fixed_[i]) continue;
      free_cells_[free_count_++] = i;
      ++row_free_[i / kSide];
      ++col_free_[i % kSide];
    }
    if (opts_.limit && *opts_.limit == 0) return {0, true};
    if (opts_.prune && !feasible(kAllValues & ~used)) return {0, false};
    fill(0, static_cast<ValueMask>(kAllValues & ~used));
    return {count_, stopped_};
  }

 private:
  // Sum of the k smallest / largest values in the mask.
  static int smallest(ValueMask m, int k) noexcept {
    int s = 0;
    for (int v = 1; v <= 9 && k > 0; ++v)
      if (m & value_bit(v)) s += v, --k;
    return s;
  }
  static int largest(ValueMask m, int k) noexcept {
    int s = 0;
    for (int v = 9; v >= 1 && k > 0; --v)
      if (m & value_bit(v)) s += v, --k;
    return s;
  }

  static bool line_ok(int partial, int open, int target, ValueMask avail) noexcept {
    if (open == 0) return partial == target;
    if (partial + smallest(avail, open) > target) return false;
    if (partial + largest(avail, open) < target) return false;
    return true;
  }

  bool feasible(ValueMask avail) const noexcept {
    for (int r = 0; r < kSide; ++r)
      if (!line_ok(row_sum_[r], row_free_[r], clues_.row_sums()[r], avail)) return false;
    for (int c = 0; c < kSide; ++c)
      if (!line_ok(col_sum_[c], col_free_[c], clues_.col_sums()[c], avail)) return false;
    return true;
  }

  void fill(int k, ValueMask avail) {
    if (stopped_) return;
    if (k == free_count_) {
      if (!opts_.prune) {
        for (int r = 0; r < kSide; ++r)
          if (row_sum_[r] != clues_.row_sums()[r]) return;
        for (int c = 0; c < kSide; ++c)
          if (col_sum_[c] != clues_.col_sums()[c]) return;
      }
      ++count_;
      if (sink_) sink_->push_back(Grid(cells_));
      if (opts_.limit && count_ >= *opts_.limit) stopped_ = true;
      return;
    }
    const int cell = free_cells_[k];
    const int r = cell / kSide, c = cell % kSide;
    for (ValueMask m = avail; m != 0; m = static_cast<ValueMask>(m & (m - 1))) {
      const int v = std::countr_zero(static_cast<unsigned>(m)) + 1;
      const auto rest = static_cast<ValueMask>(avail & ~value_bit(v));
      cells_[cell] = v;
      row_sum_[r] += v;
      col_sum_[c] += v;
      --row_free_[r];
      --col_free_[c];
      const bool ok = !opts_.prune ||
                      (line_ok(row_sum_[r], row_free_[r], clues_.row_sums()[r], rest) &&
                       line_ok(col_sum_[c], col_free_[c], clues_.col_sums()[c], rest));
      if (ok) fill(k + 1, rest);
      ++row_free_[r];
      ++col_free_[c];
      row_sum_[r] -= v;
      col_sum_[c] -= v;
      if (stopped_) return;
    }
  }

  const ClueSet& clues_;
  const SolveOptions& opts_;
  std::vector<Grid>* sink_;

  std::array<int, kCells> cells_{};
  std::array<bool, kCells> fixed_{};
  std::array<int, kCells> free_cells_{};
  int free_count_ = 0;
  Sums row_sum_{}, col_sum_{};
  Sums row_free_{}, col_free_{};
  std::size_t count_ = 0;
  bool stopped_ = false;
};

}  // namespace detail

inline SolveResult solve(const ClueSet& clues, const SolveOptions& opts = {}) {
  SolveResult out;
  auto [n, stopped] = detail::Search(clues, opts, &out.solutions).run();
  out.count = n;
  out.truncated = stopped;
  return out;
}

inline SolveResult solve(const ClueSet& clues, std::size_t limit) {
  return solve(clues, SolveOptions{limit, true});
}

inline std::size_t count_solutions(const ClueSet& clues, const SolveOptions& opts = {}) {
  return detail::Search(clues, opts, nullptr).run().first;
}

}  // namespace fubuki
