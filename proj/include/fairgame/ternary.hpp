#pragma once

// Everything specific to three colors: the full binary tree of non-trivial
// fair triples rooted at (0, 1, 3), the u-parametrization of games with a
// fixed coordinate, the coordinate set C3 and its counting formulas, the
// Fibonacci extremes of tree levels, and the correspondence with integer
// points on the Lorentzian quadric w1^2 + w2^2 - w3^2 = -3.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairgame/tree.hpp"

namespace fairgame {

// A fair triple, ascending. Non-trivial games (anything other than the zero
// game and (0,0,1)) have pairwise distinct coordinates and carry their depth
// below the tree root (0, 1, 3).
struct TernaryGame {
  std::array<Integer, 3> triple;
  std::optional<long> depth;  // absent for the two trivial games

  explicit TernaryGame(std::array<Integer, 3> coords);

  bool trivial() const { return !depth.has_value(); }
  friend bool operator==(const TernaryGame& a, const TernaryGame& b) {
    return a.triple == b.triple;
  }
  friend auto operator<=>(const TernaryGame& a, const TernaryGame& b) {
    return a.triple <=> b.triple;
  }
};

// c belongs to C3 (some fair triple uses the coordinate c) iff 2c+1 has no
// prime factor = 2 (mod 3) and at most one factor of 3. The two predicates
// route through the factorization and through the -c(c-1) square test
// respectively; they must agree everywhere.
bool c3_contains(const Integer& c);
bool c3_contains_residue(const Integer& c);

// For every u in [u_lo, u_hi] with u^2 = -c(c-1) (mod 2c+1), the fair game
// ((u^2 + (2c+1)u + c(c-1)) / (2(2c+1)),
//  (u^2 - (2c+1)u + c(c-1)) / (2(2c+1)), c), deduplicated (u and -u give
// the same game), ascending. Requires c in C3.
std::vector<TernaryGame> games_with_coordinate(const Integer& c,
                                               const Integer& u_lo,
                                               const Integer& u_hi);

// Games whose largest coordinate is exactly c, from the representative
// window |u| <= c. Requires c in C3 and c > 1.
std::vector<TernaryGame> games_with_max_coordinate(const Integer& c);

// 2^(m-1) with m the number of distinct primes != 3 dividing 2c+1; equals
// the size of games_with_max_coordinate(c). Requires c in C3 and c > 1.
Integer count_max_coordinate(const Integer& c);

// Ascending members of C3 up to limit; |C3 ∩ [0, limit]| / limit. The
// density is undefined at limit 0 and rejected there.
std::vector<Integer> c3_list(const Integer& limit);
Rational c3_density(const Integer& limit);

// Children of a non-trivial game in the binary tree; "left" is the child of
// smaller norm (vary the middle coordinate), "right" the larger (vary the
// smallest). tree_parent inverts either move; the parent of (0, 1, 3) is
// the trivial game (0, 0, 1).
TernaryGame left_child(const TernaryGame& g);
TernaryGame right_child(const TernaryGame& g);
TernaryGame tree_parent(const TernaryGame& g);

// Level extremes at depth k below (0, 1, 3): smallest norm is
// (0, C(k+2, 2), C(k+3, 2)); largest is (m_k, m_{k+1}, m_{k+2}) with the
// recurrence m_{i+3} = 2(m_{i+1} + m_{i+2}) + 1 - m_i from (0, 1, 3).
TernaryGame min_norm_node(long k);
TernaryGame max_norm_node(long k);

// m_k by the recurrence; closed form f_k^2 - [k even] over the f_0 = f_1 = 1
// Fibonacci numbers.
Integer m_sequence(long k);

// An integer point on w1^2 + w2^2 - w3^2 = -3. Construction enforces the
// quadric along with the structural facts every such point satisfies:
// |w3| > |w1|, |w2|; exactly one of w1, w2 odd and w3 even; w1 != w2.
struct LorentzPoint {
  Integer w1, w2, w3;

  LorentzPoint(Integer w1, Integer w2, Integer w3);
};

// w = (2(x2 - x3), 2(x1 - x2 - x3) - 1, 2(x2 + x3 + 1)) for an ascending
// solution triple; fair games land in w1, w2 <= 0 <= w3.
LorentzPoint to_lorentz(const std::array<Integer, 3>& x);

// Inverse map x = ((w2 + w3 - 1)/2, (w1 + w3 - 2)/4, (w3 - w1 - 2)/4),
// defined on the w2-odd representative of each swap class; rejects even w2
// or failed divisibility.
std::array<Integer, 3> from_lorentz(const LorentzPoint& w);

// |{w on the quadric : w1^2 + w2^2 + w3^2 <= k^2}| by direct scan of w3
// (the Euclidean ball; the norm condition reads 2 w3^2 - 3 <= k^2).
// count_s3_ellipsoid keeps only w2-odd points, one per swap class, i.e.
// exactly half; count_f3_ellipsoid further restricts to the fair sign
// pattern w1, w2 <= 0 <= w3.
std::uint64_t count_lorentz(std::uint64_t k);
std::uint64_t count_s3_ellipsoid(std::uint64_t k);
std::uint64_t count_f3_ellipsoid(std::uint64_t k);

// Visits every quadric point in the Euclidean k-ball once. Exposed so the
// structural facts above can be property-checked over full scans.
void for_each_lorentz_point(
    std::uint64_t k,
    const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn);

}  // namespace fairgame
