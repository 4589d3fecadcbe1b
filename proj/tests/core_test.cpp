#include <catch_amalgamated.hpp>

#include <random>

#include "fubuki/core.hpp"
#include "fubuki/random.hpp"
#include "test_support.hpp"

using namespace fubuki;
using fubuki::test::intro_first;
using fubuki::test::intro_second;
using fubuki::test::intro_unique;

TEST_CASE("row and column sums of the worked examples", "[core]") {
  CHECK(row_sums(intro_first()) == Sums{10, 15, 20});
  CHECK(col_sums(intro_first()) == Sums{16, 15, 14});
  CHECK(row_sums(intro_unique()) == Sums{11, 14, 20});
  CHECK(col_sums(intro_unique()) == Sums{14, 15, 16});
}

TEST_CASE("line sums of every grid total 45", "[core][property]") {
  Rng rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const Grid g = random_grid(rng);
    const auto r = row_sums(g), c = col_sums(g);
    REQUIRE(r[0] + r[1] + r[2] == kTotal);
    REQUIRE(c[0] + c[1] + c[2] == kTotal);
  }
}

TEST_CASE("grid construction rejects anything but a permutation of 1..9", "[core]") {
  CHECK_THROWS_AS(Grid({1, 2, 3, 4, 5, 6, 7, 8, 8}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0, 2, 3, 4, 5, 6, 7, 8, 9}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({1, 2, 3, 4, 5, 6, 7, 8, 10}), std::invalid_argument);
  CHECK_FALSE(Grid::try_make({2, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(Grid::try_make({9, 8, 7, 6, 5, 4, 3, 2, 1}));
}

TEST_CASE("satisfies checks prescribed cells and all six sums", "[core]") {
  const auto clues = test::intro_two_clues();
  CHECK(satisfies(intro_first(), clues));
  CHECK(satisfies(intro_second(), clues));
  CHECK_FALSE(satisfies(intro_unique(), clues));

  // Right sums, wrong prescribed value.
  const ClueSet moved({{0, 0, 2}}, {10, 15, 20}, {16, 15, 14});
  CHECK_FALSE(satisfies(intro_first(), moved));
}

TEST_CASE("clue_of projects the regime's diagonal cells", "[core]") {
  const auto full = clue_of(intro_first(), Regime::FullDiagonal);
  CHECK(full == test::intro_two_clues());

  const auto top = clue_of(intro_unique(), Regime::TopLeft);
  REQUIRE(top.prescribed().size() == 1);
  CHECK(top.prescribed()[0] == Prescribed{0, 0, 1});
  CHECK(top.row_sums() == Sums{11, 14, 20});
  CHECK(top.col_sums() == Sums{14, 15, 16});

  CHECK(clue_of(intro_unique(), Regime::FirstTwoDiagonal).prescribed().size() == 2);
  CHECK(clue_of(intro_unique(), Regime::None).prescribed().empty());
}

TEST_CASE("every grid satisfies its own clue set under every regime", "[core][property]") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Grid g = random_grid(rng);
    for (Regime r : kAllRegimes) REQUIRE(satisfies(g, clue_of(g, r)));
  }
}

TEST_CASE("clue set validation", "[core]") {
  const Sums ok_rows{10, 15, 20}, ok_cols{16, 15, 14};
  CHECK_THROWS_AS(ClueSet({{0, 0, 1}, {0, 0, 2}}, ok_rows, ok_cols), std::invalid_argument);
  CHECK_THROWS_AS(ClueSet({{0, 0, 1}, {1, 1, 1}}, ok_rows, ok_cols), std::invalid_argument);
  CHECK_THROWS_AS(ClueSet({{3, 0, 1}}, ok_rows, ok_cols), std::invalid_argument);
  CHECK_THROWS_AS(ClueSet({{0, 0, 10}}, ok_rows, ok_cols), std::invalid_argument);
  CHECK_THROWS_AS(ClueSet({}, {5, 20, 20}, ok_cols), std::invalid_argument);
  CHECK_THROWS_AS(ClueSet({}, ok_rows, {25, 10, 10}), std::invalid_argument);
  // A total other than 45 is a legal, unsatisfiable value.
  CHECK_NOTHROW(ClueSet({}, {10, 14, 20}, ok_cols));
  // Off-diagonal prescriptions are allowed.
  CHECK_NOTHROW(ClueSet({{0, 2, 5}}, ok_rows, ok_cols));
}

TEST_CASE("prescribed cells are kept in position order", "[core]") {
  const ClueSet c({{2, 2, 3}, {0, 0, 1}, {1, 1, 2}}, {10, 15, 20}, {16, 15, 14});
  CHECK(c == test::intro_two_clues());
  CHECK(c.value_at(1, 1) == 2);
  CHECK_FALSE(c.value_at(0, 1));
}

TEST_CASE("diagonal sets", "[core]") {
  const DiagonalSet d(3, 1, 2);
  CHECK(d.values() == std::array<int, 3>{1, 2, 3});
  CHECK(d.mask() == 0b111);
  CHECK(DiagonalSet::of(intro_unique()) == d);
  CHECK_THROWS_AS(DiagonalSet(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalSet(0, 1, 2), std::invalid_argument);

  const auto all = all_diagonal_sets();
  CHECK(all.size() == 84);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("regime names round-trip", "[core]") {
  for (Regime r : kAllRegimes) {
    CHECK(parse_regime(regime_flag(r)) == r);
    CHECK(parse_regime(regime_id(r)) == r);
  }
  CHECK_FALSE(parse_regime("diagonal"));
}
