#pragma once

// Exhaustive sweep over all 9! grids.
//
// Grids that induce the same clue set under a regime answer the same puzzle,
// so bucketing grids by clue signature gives every puzzle's solution count in
// one pass.
//
// Two tallies come out of the buckets. The published one, `unique_count`,
// counts each solvable puzzle once: a grid is counted when it is the
// lexicographically first solution of its own puzzle, so a two-solution
// puzzle contributes one grid, not zero. `single_solution_grids` is the
// stricter count of grids whose puzzle has no other solution (bucket size 1).

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fubuki/core.hpp"
#include "fubuki/random.hpp"
#include "fubuki/solver.hpp"
#include "fubuki/theory.hpp"

namespace fubuki {

inline constexpr std::size_t kGridCount = 362880;  // 9!

enum class SweepOrder { Lexicographic, Reversed };

struct SweepOptions {
  unsigned threads = 1;
  SweepOrder order = SweepOrder::Lexicographic;
};

/// FUBUKI_THREADS if set to a positive integer, else the hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("FUBUKI_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {

// The permutation space is cut into 72 chunks by the values of the first two
// cells. Chunk k fixes cell 0 to 1 + k / 8 and cell 1 to the (k % 8)-th
// smallest remaining value.
inline constexpr int kChunks = 72;

template <typename Visit>
void sweep_chunk(int chunk, SweepOrder order, Visit&& visit) {
  std::array<int, kCells> cells{};
  cells[0] = 1 + chunk / 8;
  std::array<int, 8> rest{};
  for (int v = 1, n = 0; v <= 9; ++v)
    if (v != cells[0]) rest[n++] = v;
  cells[1] = rest[chunk % 8];
  for (int v = 1, n = 2; v <= 9; ++v)
    if (v != cells[0] && v != cells[1]) cells[n++] = v;

  const auto tail_begin = cells.begin() + 2;
  if (order == SweepOrder::Lexicographic) {
    do {
      visit(Grid(cells));
    } while (std::next_permutation(tail_begin, cells.end()));
  } else {
    std::reverse(tail_begin, cells.end());
    do {
      visit(Grid(cells));
    } while (std::prev_permutation(tail_begin, cells.end()));
  }
}

}  // namespace detail

/// Folds every grid into a per-chunk accumulator, then merges the chunk
/// results in sweep order. The result does not depend on the thread count.
template <typename Acc, typename Visit, typename Merge>
Acc sweep_grids(const SweepOptions& opts, Visit visit, Merge merge) {
  std::vector<Acc> partial(detail::kChunks);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < detail::kChunks; k = next++) {
      const int chunk = opts.order == SweepOrder::Lexicographic ? k : detail::kChunks - 1 - k;
      Acc& acc = partial[chunk];
      detail::sweep_chunk(chunk, opts.order, [&](const Grid& g) { visit(acc, g); });
    }
  };
  const unsigned n = std::clamp(opts.threads, 1u, static_cast<unsigned>(detail::kChunks));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  Acc out{};
  if (opts.order == SweepOrder::Lexicographic) {
    for (auto& p : partial) merge(out, std::move(p));
  } else {
    for (auto it = partial.rbegin(); it != partial.rend(); ++it) merge(out, std::move(*it));
  }
  return out;
}

/// Canonical clue key of a grid under a regime.
///
/// Packing, least significant bits first:
///   bits  0..29  row sums 1..3 then column sums 1..3, 5 bits each
///   bits 30..41  revealed diagonal values (1,1), (2,2), (3,3), 4 bits each, 0 if hidden
///   bits 42..43  regime
struct ClueSignature {
  std::uint64_t key = 0;

  static ClueSignature of(const Grid& g, Regime regime) noexcept {
    std::uint64_t k = 0;
    int shift = 0;
    auto put = [&](int v, int bits) {
      k |= static_cast<std::uint64_t>(v) << shift;
      shift += bits;
    };
    for (int r = 0; r < kSide; ++r) put(g.at(r, 0) + g.at(r, 1) + g.at(r, 2), 5);
    for (int c = 0; c < kSide; ++c) put(g.at(0, c) + g.at(1, c) + g.at(2, c), 5);
    const int revealed = revealed_diagonal_cells(regime);
    for (int i = 0; i < kSide; ++i) put(i < revealed ? g.at(i, i) : 0, 4);
    put(static_cast<int>(regime), 2);
    return {k};
  }

  friend auto operator<=>(const ClueSignature&, const ClueSignature&) = default;
};

struct CensusReport {
  Regime regime = Regime::FullDiagonal;
  std::size_t total_grids = 0;
  std::map<std::size_t, std::size_t> histogram;  // bucket size -> grids in such buckets
  std::size_t unique_count = 0;           // distinct solvable puzzles
  std::size_t single_solution_grids = 0;  // grids in size-1 buckets
  std::size_t max_bucket = 0;

  /// Number of distinct clue sets of each bucket size.
  std::size_t signatures_of_size(std::size_t k) const {
    const auto it = histogram.find(k);
    return it == histogram.end() ? 0 : it->second / k;
  }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Sorted signatures of every grid under one regime.
class SignatureIndex {
 public:
  SignatureIndex(Regime regime, std::vector<std::uint64_t> keys)
      : regime_(regime), keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
  }

  Regime regime() const noexcept { return regime_; }

  std::size_t bucket_size(const Grid& g) const {
    const auto k = ClueSignature::of(g, regime_).key;
    const auto [lo, hi] = std::equal_range(keys_.begin(), keys_.end(), k);
    return static_cast<std::size_t>(hi - lo);
  }

  CensusReport report() const {
    CensusReport r;
    r.regime = regime_;
    r.total_grids = keys_.size();
    for (std::size_t i = 0; i < keys_.size();) {
      std::size_t j = i;
      while (j < keys_.size() && keys_[j] == keys_[i]) ++j;
      const std::size_t size = j - i;
      r.histogram[size] += size;
      r.max_bucket = std::max(r.max_bucket, size);
      ++r.unique_count;
      i = j;
    }
    const auto it = r.histogram.find(1);
    r.single_solution_grids = it == r.histogram.end() ? 0 : it->second;
    return r;
  }

 private:
  Regime regime_;
  std::vector<std::uint64_t> keys_;
};

/// Builds the signature index of several regimes in a single sweep.
inline std::vector<SignatureIndex> build_signature_indexes(const std::vector<Regime>& regimes,
                                                           const SweepOptions& opts = {}) {
  using Keys = std::vector<std::vector<std::uint64_t>>;
  Keys keys = sweep_grids<Keys>(
      opts,
      [&](Keys& acc, const Grid& g) {
        if (acc.empty()) acc.resize(regimes.size());
        for (std::size_t i = 0; i < regimes.size(); ++i)
          acc[i].push_back(ClueSignature::of(g, regimes[i]).key);
      },
      [&](Keys& out, Keys&& part) {
        if (out.empty()) out.resize(regimes.size());
        for (std::size_t i = 0; i < part.size(); ++i)
          out[i].insert(out[i].end(), part[i].begin(), part[i].end());
      });
  std::vector<SignatureIndex> out;
  for (std::size_t i = 0; i < regimes.size(); ++i) out.emplace_back(regimes[i], std::move(keys[i]));
  return out;
}

inline std::vector<CensusReport> census(const std::vector<Regime>& regimes,
                                        const SweepOptions& opts = {}) {
  std::vector<CensusReport> out;
  for (const auto& index : build_signature_indexes(regimes, opts)) out.push_back(index.report());
  return out;
}

inline CensusReport census(Regime regime, const SweepOptions& opts = {}) {
  return census(std::vector<Regime>{regime}, opts).front();
}

inline std::size_t max_solutions_observed(Regime regime, const SweepOptions& opts = {}) {
  return census(regime, opts).max_bucket;
}

/// The published full-diagonal tally, from the shift table alone.
///
/// Per arrangement of a diagonal (3! of them) there are 6! fillings. With no
/// shift all are unique. With one shift c, the fillings that admit S_c put
/// the triplet on the three "+a" cells and its partners on the "-a" cells:
/// 3! * 3! of them, each paired with an S_{-c} grid already counted. Two
/// shifts have distinct triplets, so twice as many.
struct ClosedFormCount {
  std::size_t no_shift_sets = 0;
  std::size_t one_shift_sets = 0;
  std::size_t two_shift_sets = 0;
  std::array<std::size_t, 3> addends{};
  std::size_t total = 0;
};

inline ClosedFormCount closed_form_unique_count() {
  ClosedFormCount out;
  for (const auto& row : build_shift_table()) {
    switch (row.shifts.size()) {
      case 0: ++out.no_shift_sets; break;
      case 1: ++out.one_shift_sets; break;
      case 2: ++out.two_shift_sets; break;
      default: break;  // build_shift_table already rejects these
    }
  }
  constexpr std::size_t f3 = 6, f6 = 720;
  out.addends[0] = out.no_shift_sets * f3 * f6;
  out.addends[1] = out.one_shift_sets * f3 * (f6 - f3 * f3);
  out.addends[2] = out.two_shift_sets * f3 * (f6 - 2 * f3 * f3);
  out.total = out.addends[0] + out.addends[1] + out.addends[2];
  return out;
}

struct CompanionTally {
  std::size_t first_solutions = 0;  // no companion precedes the grid
  std::size_t companionless = 0;    // no companion at all
};

/// Full-diagonal tallies through companion_solutions instead of signatures.
inline CompanionTally companion_tally(const SweepOptions& opts = {}) {
  return sweep_grids<CompanionTally>(
      opts,
      [](CompanionTally& acc, const Grid& g) {
        const auto others = companion_solutions(g);
        if (others.empty()) ++acc.companionless;
        if (others.empty() || g < others.front()) ++acc.first_solutions;
      },
      [](CompanionTally& out, const CompanionTally& part) {
        out.first_solutions += part.first_solutions;
        out.companionless += part.companionless;
      });
}

struct OracleComparison {
  std::size_t grids_checked = 0;
  std::size_t discrepancies = 0;
  std::size_t max_solutions = 0;  // largest full-diagonal solution count seen
  std::optional<Grid> first_mismatch;
};

/// For every grid, compares companion_solutions with a brute-force solve of
/// the grid's full-diagonal puzzle.
inline OracleComparison compare_with_oracle(const SweepOptions& opts = {}) {
  return sweep_grids<OracleComparison>(
      opts,
      [](OracleComparison& acc, const Grid& g) {
        ++acc.grids_checked;
        auto brute = solve(clue_of(g, Regime::FullDiagonal)).solutions;
        acc.max_solutions = std::max(acc.max_solutions, brute.size());
        const auto self = std::find(brute.begin(), brute.end(), g);
        const bool had_self = self != brute.end();
        if (had_self) brute.erase(self);
        if (!had_self || brute != companion_solutions(g)) {
          ++acc.discrepancies;
          if (!acc.first_mismatch) acc.first_mismatch = g;
        }
      },
      [](OracleComparison& out, OracleComparison&& part) {
        out.grids_checked += part.grids_checked;
        out.discrepancies += part.discrepancies;
        out.max_solutions = std::max(out.max_solutions, part.max_solutions);
        if (!out.first_mismatch) out.first_mismatch = part.first_mismatch;
      });
}

struct CrossCheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<Grid> first_mismatch;
  std::size_t bucket_size = 0;   // at the first mismatch
  std::size_t solver_count = 0;  // at the first mismatch
};

/// Samples `sample` seeded random grids and checks that each one's bucket
/// size matches the solver's count for its puzzle.
inline CrossCheckResult cross_check(const SignatureIndex& index, std::size_t sample,
                                    std::uint64_t seed) {
  CrossCheckResult out;
  Rng rng(seed);
  for (std::size_t i = 0; i < sample; ++i) {
    const Grid g = random_grid(rng);
    const std::size_t bucket = index.bucket_size(g);
    const std::size_t solved = count_solutions(clue_of(g, index.regime()));
    ++out.checked;
    if (bucket != solved) {
      out.ok = false;
      out.first_mismatch = g;
      out.bucket_size = bucket;
      out.solver_count = solved;
      break;
    }
  }
  return out;
}

inline CrossCheckResult cross_check(Regime regime, std::size_t sample, std::uint64_t seed,
                                    const SweepOptions& opts = {}) {
  if (sample == 0) return {};
  return cross_check(build_signature_indexes({regime}, opts).front(), sample, seed);
}

}  // namespace fubuki
