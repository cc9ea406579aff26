#include "fairgame/binary.hpp"

#include <doctest.h>

using fairgame::BinaryGame;
using fairgame::Integer;

TEST_CASE("pair construction and fairness") {
  CHECK(fairgame::binary_game(0).pair == std::array<Integer, 2>{0, 0});
  CHECK(fairgame::binary_game(1).pair == std::array<Integer, 2>{0, 1});
  CHECK(fairgame::binary_game(3).pair == std::array<Integer, 2>{3, 6});
  CHECK_THROWS_AS(fairgame::binary_game(-1), std::invalid_argument);

  for (long m = 0; m <= 200; ++m) {
    const BinaryGame g = fairgame::binary_game(m);
    CAPTURE(m);
    REQUIRE(g.pair[0] == fairgame::binom2(Integer(m)));
    REQUIRE(g.pair[1] == fairgame::binom2(Integer(m) + 1));
    if (m >= 1) {
      REQUIRE(g.pair[1] == fairgame::triangular(Integer(m)));
    }
    REQUIRE(fairgame::is_fair_game({g.pair[0], g.pair[1]}));
  }
}

TEST_CASE("consecutive pairs are joined by the Vieta move") {
  for (long m = 0; m <= 100; ++m) {
    const BinaryGame cur = fairgame::binary_game(m);
    const BinaryGame next = fairgame::binary_game(m + 1);
    const fairgame::SolutionVector v({cur.pair[0], cur.pair[1]});
    // Jumping the smaller coordinate moves one step up the branch.
    const fairgame::SolutionVector up = fairgame::neighbor(v, 0);
    REQUIRE(up.coords() ==
            std::vector<Integer>{next.pair[0], next.pair[1]});
    if (m >= 1) {
      const BinaryGame prev = fairgame::binary_game(m - 1);
      const fairgame::SolutionVector down = fairgame::neighbor(v, 1);
      REQUIRE(down.coords() ==
              std::vector<Integer>{prev.pair[0], prev.pair[1]});
    }
  }
}

TEST_CASE("fair-pair counting formula") {
  CHECK(fairgame::count_f2(0) == 1);
  CHECK(fairgame::count_f2(1) == 2);
  CHECK(fairgame::count_f2(4) == 3);
  CHECK(fairgame::count_f2(10) == 4);
  CHECK(fairgame::count_f2(1000000) == 1190);
  CHECK_THROWS_AS(fairgame::count_f2(-1), std::invalid_argument);

  for (long k = 0; k <= 10000; ++k) {
    CAPTURE(k);
    REQUIRE(fairgame::count_f2(k) == fairgame::count_f2_oracle(k));
  }

  // |F2(k)| ~ 2^(1/4) sqrt(k): at k = 10^6 the ratio is within 1%.
  const double ratio = fairgame::count_f2(1000000).get_d() / 1000.0;
  CHECK(ratio > 1.1892 * 0.99);
  CHECK(ratio < 1.1892 * 1.01);
}

TEST_CASE("triangular-number counting formula and the zero convention") {
  CHECK(fairgame::count_c2(10) == 4);
  CHECK(fairgame::count_c2_oracle(10) == 5);  // {0, 1, 3, 6, 10}
  CHECK(fairgame::count_c2(0) == 0);
  CHECK(fairgame::count_c2_oracle(0) == 1);
  CHECK_THROWS_AS(fairgame::count_c2(-1), std::invalid_argument);

  // The closed form counts positive triangular numbers; the enumeration
  // includes 0, so the two differ by exactly one everywhere.
  for (long k = 0; k <= 10000; ++k) {
    CAPTURE(k);
    REQUIRE(fairgame::count_c2(k) + 1 == fairgame::count_c2_oracle(k));
  }
}
