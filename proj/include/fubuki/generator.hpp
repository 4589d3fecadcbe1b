#pragma once

// Seeded puzzle generation.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fubuki/core.hpp"
#include "fubuki/random.hpp"
#include "fubuki/solver.hpp"
#include "fubuki/theory.hpp"

namespace fubuki {

struct GeneratorConfig {
  Regime regime = Regime::FullDiagonal;
  bool require_unique = false;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Diagonal sets that admit no shift, lexicographic.
inline std::vector<DiagonalSet> unique_diagonals() {
  std::vector<DiagonalSet> out;
  for (const auto& row : build_shift_table())
    if (row.shifts.empty()) out.push_back(row.diagonal);
  return out;
}

/// Generates `count` puzzles, each the clue set of a random grid.
///
/// Full-diagonal unique puzzles are drawn directly: a diagonal from the
/// shift-free sets (in random order on the diagonal) and a random arrangement
/// of the other six values. Any such grid is the only solution of its puzzle.
/// Other regimes draw random grids and keep those the solver finds unique.
inline std::vector<ClueSet> generate(const GeneratorConfig& cfg) {
  if (cfg.count == 0) throw std::invalid_argument("count must be at least 1");
  Rng rng(cfg.seed);
  std::vector<ClueSet> out;
  out.reserve(cfg.count);

  if (cfg.require_unique && cfg.regime == Regime::FullDiagonal) {
    const auto diagonals = unique_diagonals();
    while (out.size() < cfg.count) {
      const auto& d = diagonals[rng.below(diagonals.size())];
      std::array<int, 3> diag = d.values();
      rng.shuffle(std::span<int>(diag));
      std::array<int, 6> rest = OffDiagonalSet::complement_of(d).values();
      rng.shuffle(std::span<int>(rest));
      std::array<int, kCells> cells{};
      for (int i = 0; i < 3; ++i) cells[kDiagonalCells[i]] = diag[i];
      for (int i = 0, n = 0; i < kCells; ++i)
        if (i % 4 != 0) cells[i] = rest[n++];
      out.push_back(clue_of(Grid(cells), cfg.regime));
    }
    return out;
  }

  while (out.size() < cfg.count) {
    auto clues = clue_of(random_grid(rng), cfg.regime);
    if (cfg.require_unique && count_solutions(clues, SolveOptions{2, true}) != 1) continue;
    out.push_back(std::move(clues));
  }
  return out;
}

}  // namespace fubuki
