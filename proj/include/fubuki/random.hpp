#pragma once

// Reproducible randomness.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Standard distributions are not, so bounded draws and shuffles are
// done here:
//   below(n):  draw x from the engine; reject while x >= 2^64 - (2^64 mod n);
//              return x mod n.
//   shuffle:   Fisher-Yates from the last index down, swapping i with below(i + 1).
// Same seed, same output on every conforming implementation.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "fubuki/core.hpp"

namespace fubuki {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t reject_from = -(-n % n);  // 0 when n divides 2^64
    for (;;) {
      const std::uint64_t x = engine_();
      if (reject_from == 0 || x < reject_from) return x % n;
    }
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline Grid random_grid(Rng& rng) {
  std::array<int, kCells> cells = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  rng.shuffle(std::span<int>(cells));
  return Grid(cells);
}

}  // namespace fubuki
