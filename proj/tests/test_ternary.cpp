#include "fairgame/ternary.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using fairgame::Integer;
using fairgame::LorentzPoint;
using fairgame::Rational;
using fairgame::TernaryGame;

namespace {

TernaryGame game(long a, long b, long c) {
  return TernaryGame({Integer(a), Integer(b), Integer(c)});
}

std::array<Integer, 3> triple(long a, long b, long c) {
  return {Integer(a), Integer(b), Integer(c)};
}

Integer norm_sq(const TernaryGame& g) {
  return g.triple[0] * g.triple[0] + g.triple[1] * g.triple[1] +
         g.triple[2] * g.triple[2];
}

// All non-trivial games at the given depth, in triple order.
std::vector<TernaryGame> level(long depth) {
  std::vector<TernaryGame> cur{game(0, 1, 3)};
  for (long d = 0; d < depth; ++d) {
    std::vector<TernaryGame> next;
    for (const TernaryGame& g : cur) {
      next.push_back(fairgame::left_child(g));
      next.push_back(fairgame::right_child(g));
    }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("game construction sorts, validates, and measures depth") {
  CHECK(game(3, 1, 0).triple == triple(0, 1, 3));
  CHECK(game(0, 1, 3).depth == 0);
  CHECK(game(0, 3, 6).depth == 1);
  CHECK(game(1, 3, 9).depth == 1);
  CHECK(game(0, 6, 10).depth == 2);
  CHECK(game(9, 24, 64).depth == 3);
  CHECK(game(0, 0, 0).trivial());
  CHECK(game(0, 0, 1).trivial());
  CHECK_FALSE(game(0, 1, 3).trivial());
  CHECK_THROWS_AS(game(1, 1, 1), std::invalid_argument);  // not fair
  CHECK_THROWS_AS(game(-1, -1, -1), std::invalid_argument);  // fair, negative
  CHECK(game(0, 1, 3) == game(1, 3, 0));
  CHECK(game(0, 1, 3) < game(0, 3, 6));
}

TEST_CASE("coordinate membership in C3, both decision paths") {
  CHECK(fairgame::c3_contains(0));
  CHECK(fairgame::c3_contains(1));
  CHECK_FALSE(fairgame::c3_contains(2));
  CHECK(fairgame::c3_contains(3));
  CHECK_FALSE(fairgame::c3_contains(13));  // 2c+1 = 27 has two factors of 3
  CHECK(fairgame::c3_contains(24));        // 2c+1 = 49 = 7^2
  CHECK(fairgame::c3_contains(45));
  CHECK_THROWS_AS(fairgame::c3_contains(-1), std::invalid_argument);
  CHECK_THROWS_AS(fairgame::c3_contains_residue(-1), std::invalid_argument);
  for (long c = 0; c <= 2000; ++c) {
    CAPTURE(c);
    REQUIRE(fairgame::c3_contains(c) == fairgame::c3_contains_residue(c));
  }
}

TEST_CASE("membership list and density") {
  const std::vector<Integer> want{0, 1, 3, 6, 9, 10};
  CHECK(fairgame::c3_list(13) == want);
  CHECK(fairgame::c3_list(0) == std::vector<Integer>{0});
  CHECK(fairgame::c3_density(1000) == Rational(293, 1000));
  CHECK(fairgame::c3_density(10000) == Rational(513, 2000));  // 2565/10000
  CHECK(fairgame::c3_density(10000) < fairgame::c3_density(1000));
  CHECK_THROWS_AS(fairgame::c3_density(0), std::invalid_argument);
  CHECK_THROWS_AS(fairgame::c3_density(-5), std::invalid_argument);
}

TEST_CASE("parametrized games with a fixed coordinate") {
  using fairgame::games_with_coordinate;
  const auto at3 = games_with_coordinate(3, -3, 3);
  REQUIRE(at3.size() == 1);
  CHECK(at3[0] == game(0, 1, 3));

  // c = 0 embeds the two-color family: consecutive triangular numbers.
  const auto at0 = games_with_coordinate(0, 0, 10);
  REQUIRE(at0.size() == 11);
  for (long u = 0; u <= 10; ++u) {
    const Integer t_prev = u * (u - 1) / 2;
    const Integer t_cur = u * (u + 1) / 2;
    CHECK(std::count(at0.begin(), at0.end(),
                     TernaryGame({0, t_prev, t_cur})) == 1);
  }

  const auto at1 = games_with_coordinate(1, -1, 1);
  REQUIRE(at1.size() == 1);
  CHECK(at1[0] == game(0, 0, 1));
  CHECK(at1[0].trivial());

  const auto at6 = games_with_coordinate(6, 0, 16);
  const std::vector<TernaryGame> want6{game(0, 3, 6), game(0, 6, 10),
                                       game(3, 6, 19)};
  CHECK(at6 == want6);

  CHECK(games_with_coordinate(3, 3, 3).empty());  // 9 is not -6 mod 7
  CHECK(games_with_coordinate(3, 5, 2).empty());  // inverted window
  CHECK_THROWS_AS(games_with_coordinate(2, 0, 10), std::invalid_argument);
}

TEST_CASE("largest-coordinate window and the 2^(m-1) count") {
  using fairgame::count_max_coordinate;
  using fairgame::games_with_max_coordinate;

  const auto at3 = games_with_max_coordinate(3);
  REQUIRE(at3.size() == 1);
  CHECK(at3[0] == game(0, 1, 3));
  CHECK(count_max_coordinate(3) == 1);

  const auto at10 = games_with_max_coordinate(10);
  REQUIRE(at10.size() == 1);
  CHECK(at10[0] == game(0, 6, 10));
  CHECK(count_max_coordinate(10) == 1);

  const auto at45 = games_with_max_coordinate(45);
  const std::vector<TernaryGame> want45{game(0, 36, 45), game(1, 30, 45)};
  CHECK(at45 == want45);
  CHECK(count_max_coordinate(45) == 2);

  const auto at271 = games_with_max_coordinate(271);
  REQUIRE(at271.size() == 1);
  CHECK(at271[0] == game(48, 90, 271));
  CHECK(count_max_coordinate(271) == 1);

  CHECK_THROWS_AS(games_with_max_coordinate(0), std::invalid_argument);
  CHECK_THROWS_AS(games_with_max_coordinate(1), std::invalid_argument);
  CHECK_THROWS_AS(games_with_max_coordinate(2), std::invalid_argument);
  CHECK_THROWS_AS(count_max_coordinate(1), std::invalid_argument);
  CHECK_THROWS_AS(count_max_coordinate(2), std::invalid_argument);

  // Formula versus direct window enumeration on a prefix; the acceptance
  // run extends this to 3000.
  for (const Integer& c : fairgame::c3_list(300)) {
    if (c <= 1) {
      continue;
    }
    CAPTURE(c);
    REQUIRE(count_max_coordinate(c) ==
            Integer(games_with_max_coordinate(c).size()));
  }
}

TEST_CASE("binary tree children, parent, and figure anchors") {
  using fairgame::left_child;
  using fairgame::right_child;
  using fairgame::tree_parent;

  CHECK(left_child(game(0, 1, 3)) == game(0, 3, 6));
  CHECK(right_child(game(0, 1, 3)) == game(1, 3, 9));
  CHECK(left_child(game(0, 3, 6)) == game(0, 6, 10));
  CHECK(right_child(game(0, 3, 6)) == game(3, 6, 19));
  CHECK(left_child(game(1, 3, 9)) == game(1, 9, 18));
  CHECK(right_child(game(1, 3, 9)) == game(3, 9, 24));

  CHECK(tree_parent(game(0, 1, 3)) == game(0, 0, 1));
  CHECK(tree_parent(game(0, 1, 3)).trivial());
  CHECK_THROWS_AS(left_child(game(0, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(right_child(game(0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(tree_parent(game(0, 0, 1)), std::invalid_argument);
}

TEST_CASE("tree structure properties over a full enumeration") {
  for (long d = 0; d <= 6; ++d) {
    const auto nodes = level(d);
    REQUIRE(nodes.size() == (1u << d));
    for (const TernaryGame& g : nodes) {
      CAPTURE(g.triple[0].get_str());
      CAPTURE(g.triple[2].get_str());
      REQUIRE(g.depth == d);
      // Pairwise distinct coordinates on every non-trivial game.
      REQUIRE(g.triple[0] < g.triple[1]);
      REQUIRE(g.triple[1] < g.triple[2]);
      const TernaryGame l = fairgame::left_child(g);
      const TernaryGame r = fairgame::right_child(g);
      REQUIRE(l != r);
      REQUIRE(norm_sq(l) < norm_sq(r));
      REQUIRE(l.depth == d + 1);
      REQUIRE(r.depth == d + 1);
      REQUIRE(fairgame::tree_parent(l) == g);
      REQUIRE(fairgame::tree_parent(r) == g);
    }
  }
}

TEST_CASE("ternary children agree with the general Vieta moves") {
  for (long d = 0; d <= 5; ++d) {
    for (const TernaryGame& g : level(d)) {
      const fairgame::SolutionVector v(
          {g.triple[0], g.triple[1], g.triple[2]});
      std::set<std::vector<Integer>> vieta;
      for (const auto& ch : fairgame::children(v)) {
        vieta.insert(ch.coords());
      }
      const TernaryGame l = fairgame::left_child(g);
      const TernaryGame r = fairgame::right_child(g);
      const std::set<std::vector<Integer>> ours{
          {l.triple[0], l.triple[1], l.triple[2]},
          {r.triple[0], r.triple[1], r.triple[2]}};
      REQUIRE(vieta == ours);
    }
  }
}

TEST_CASE("level extremes: triangular spine and Fibonacci spine") {
  using fairgame::max_norm_node;
  using fairgame::min_norm_node;

  CHECK(min_norm_node(0) == game(0, 1, 3));
  CHECK(max_norm_node(0) == game(0, 1, 3));
  CHECK(min_norm_node(1) == game(0, 3, 6));
  CHECK(max_norm_node(1) == game(1, 3, 9));
  CHECK(max_norm_node(3) == game(9, 24, 64));
  CHECK_THROWS_AS(min_norm_node(-1), std::invalid_argument);
  CHECK_THROWS_AS(max_norm_node(-1), std::invalid_argument);

  for (long d = 0; d <= 7; ++d) {
    const auto nodes = level(d);
    const TernaryGame lo = min_norm_node(d);
    const TernaryGame hi = max_norm_node(d);
    CHECK(lo.depth == d);
    CHECK(hi.depth == d);
    CHECK(lo.triple ==
          std::array<Integer, 3>{0, fairgame::binom2(Integer(d) + 2),
                                 fairgame::binom2(Integer(d) + 3)});
    Integer lo_norm = norm_sq(nodes.front());
    Integer hi_norm = lo_norm;
    for (const TernaryGame& g : nodes) {
      lo_norm = std::min(lo_norm, norm_sq(g));
      hi_norm = std::max(hi_norm, norm_sq(g));
    }
    CHECK(lo_norm == norm_sq(lo));
    CHECK(hi_norm == norm_sq(hi));
    CHECK(std::count(nodes.begin(), nodes.end(), lo) == 1);
    CHECK(std::count(nodes.begin(), nodes.end(), hi) == 1);
  }
}

TEST_CASE("m sequence recurrence and Fibonacci closed form") {
  const std::vector<long> head{0, 1, 3, 9, 24, 64, 168, 441, 1155};
  for (std::size_t k = 0; k < head.size(); ++k) {
    CHECK(fairgame::m_sequence(static_cast<long>(k)) == head[k]);
  }
  for (long k = 0; k <= 84; ++k) {
    const Integer f = fairgame::fibonacci(static_cast<unsigned long>(k));
    const Integer want = f * f - (k % 2 == 0 ? 1 : 0);
    CAPTURE(k);
    REQUIRE(fairgame::m_sequence(k) == want);
  }
  for (long k = 0; k <= 40; ++k) {
    REQUIRE(fairgame::m_sequence(k + 3) ==
            2 * (fairgame::m_sequence(k + 1) + fairgame::m_sequence(k + 2)) +
                1 - fairgame::m_sequence(k));
  }
  CHECK_THROWS_AS(fairgame::m_sequence(-1), std::invalid_argument);
}

TEST_CASE("Lorentz map anchors and validation") {
  using fairgame::from_lorentz;
  using fairgame::to_lorentz;

  const LorentzPoint w013 = to_lorentz(triple(0, 1, 3));
  CHECK(w013.w1 == -4);
  CHECK(w013.w2 == -9);
  CHECK(w013.w3 == 10);
  const LorentzPoint wzero = to_lorentz(triple(0, 0, 0));
  CHECK(wzero.w1 == 0);
  CHECK(wzero.w2 == -1);
  CHECK(wzero.w3 == 2);
  const LorentzPoint wneg = to_lorentz(triple(-1, -1, -1));
  CHECK(wneg.w1 == 0);
  CHECK(wneg.w2 == 1);
  CHECK(wneg.w3 == -2);

  CHECK(from_lorentz(w013) == triple(0, 1, 3));
  CHECK(from_lorentz(wzero) == triple(0, 0, 0));
  CHECK(from_lorentz(wneg) == triple(-1, -1, -1));

  CHECK_THROWS_AS(to_lorentz(triple(1, 0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(to_lorentz(triple(0, 1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(LorentzPoint(1, 2, 3), std::invalid_argument);
  // (-9, -4, 10) is on the quadric but represents the swapped class.
  CHECK_THROWS_AS(from_lorentz(LorentzPoint(-9, -4, 10)),
                  std::invalid_argument);
}

TEST_CASE("Lorentz round-trip across positive and negative solutions") {
  for (long d = 0; d <= 6; ++d) {
    for (const TernaryGame& g : level(d)) {
      const auto x = g.triple;
      const LorentzPoint w = fairgame::to_lorentz(x);
      REQUIRE(fairgame::from_lorentz(w) == x);
      // Fair games land in the sign-constrained region.
      REQUIRE(w.w1 <= 0);
      REQUIRE(w.w2 <= 0);
      REQUIRE(w.w3 >= 0);
      // Images of ascending solutions satisfy the mod-4 pattern.
      Integer plus = w.w1 + w.w3;
      Integer minus = w.w1 - w.w3;
      REQUIRE(mpz_fdiv_ui(plus.get_mpz_t(), 4) == 2);
      REQUIRE(mpz_fdiv_ui(minus.get_mpz_t(), 4) == 2);
      // The negated component mirrors through coordinate-wise -(1 + x).
      const std::array<Integer, 3> neg{-(x[2] + 1), -(x[1] + 1),
                                       -(x[0] + 1)};
      const LorentzPoint nw = fairgame::to_lorentz(neg);
      REQUIRE(fairgame::from_lorentz(nw) == neg);
      Integer nplus = nw.w1 + nw.w3;
      Integer nminus = nw.w1 - nw.w3;
      REQUIRE(mpz_fdiv_ui(nplus.get_mpz_t(), 4) == 2);
      REQUIRE(mpz_fdiv_ui(nminus.get_mpz_t(), 4) == 2);
    }
  }
}

TEST_CASE("quadric point counts inside Euclidean balls") {
  using fairgame::count_f3_ellipsoid;
  using fairgame::count_lorentz;
  using fairgame::count_s3_ellipsoid;

  CHECK(count_lorentz(0) == 0);
  CHECK(count_lorentz(2) == 0);  // smallest points have norm sqrt(5)
  CHECK(count_lorentz(3) == 8);
  CHECK(count_lorentz(5) == 8);
  CHECK(count_lorentz(10) == 24);
  CHECK(count_lorentz(100) == 328);
  CHECK(count_lorentz(1000) == 3224);

  CHECK(count_s3_ellipsoid(10) == 12);
  CHECK(count_s3_ellipsoid(1000) == 1612);
  for (std::uint64_t k = 0; k <= 200; ++k) {
    CAPTURE(k);
    REQUIRE(count_lorentz(k) == 2 * count_s3_ellipsoid(k));
  }

  CHECK(count_f3_ellipsoid(3) == 1);
  CHECK(count_f3_ellipsoid(5) == 1);
  CHECK(count_f3_ellipsoid(10) == 2);
  CHECK(count_f3_ellipsoid(100) == 21);
  CHECK(count_f3_ellipsoid(1000) == 202);
}

TEST_CASE("every scanned quadric point satisfies the structural facts") {
  std::set<std::array<std::int64_t, 3>> seen;
  std::uint64_t visits = 0;
  fairgame::for_each_lorentz_point(
      500, [&](std::int64_t w1, std::int64_t w2, std::int64_t w3) {
        ++visits;
        seen.insert({w1, w2, w3});
        // Construction re-checks the quadric and parity facts.
        const LorentzPoint p{Integer(w1), Integer(w2), Integer(w3)};
        REQUIRE(2 * w3 * w3 - 3 <= 500 * 500);
      });
  CHECK(visits == seen.size());  // no point visited twice
  CHECK(visits == fairgame::count_lorentz(500));
}

TEST_CASE("parametrization completeness over the tree") {
  // Every enumerated game is recovered by the window scan on its largest
  // coordinate, and every coordinate is certified a member of C3.
  for (long d = 0; d <= 8; ++d) {
    for (const TernaryGame& g : level(d)) {
      for (const Integer& c : g.triple) {
        REQUIRE(fairgame::c3_contains(c));
      }
      const auto found = fairgame::games_with_max_coordinate(g.triple[2]);
      REQUIRE(std::count(found.begin(), found.end(), g) == 1);
    }
  }
}

TEST_CASE("harvested coordinates match the membership list") {
  std::set<Integer> harvested{0, 1};  // coordinates of the trivial games
  for (const Integer& c : fairgame::c3_list(200)) {
    if (c <= 1) {
      continue;
    }
    for (const TernaryGame& g : fairgame::games_with_max_coordinate(c)) {
      for (const Integer& coord : g.triple) {
        harvested.insert(coord);
      }
    }
  }
  const auto members = fairgame::c3_list(200);
  CHECK(harvested == std::set<Integer>(members.begin(), members.end()));
}
