#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fubuki/core.hpp"

namespace fubuki::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNoSolution = 2;
inline constexpr int kMismatch = 3;

/// Published unique-solution counts per regime, in kAllRegimes order.
inline constexpr std::array<std::size_t, 4> kExpectedUnique = {351432, 281304, 163387, 46147};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, Streams io);

/// `verify` against an arbitrary expectation table; exposed for testing the
/// mismatch path.
int verify(const std::vector<Regime>& regimes, const std::array<std::size_t, 4>& expected,
           bool json, unsigned threads, Streams io);

}  // namespace fubuki::cli
