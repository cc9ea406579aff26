#pragma once

// The graph on solutions of F_n = 0: Vieta neighbors ordered by height
// |1 + s| turn every component into a rooted tree. Roots are discovered by
// factoring J(a, m) = m^2 + m + 1 + 2(s(a)^2 + s(a) + ||a||^2) into odd
// pairs (2b+1)(2c+1); bounded breadth-first enumeration walks components.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fairgame/games.hpp"

namespace fairgame {

// J(a, m) for an (n-3)-tuple a; always odd and positive.
Integer j_value(const std::vector<Integer>& a, const Integer& m);

// Largest x >= 0 with 3x^2 + 3x <= 2(s(a)^2 + s(a) + ||a||^2): no root whose
// omitted triple is a can arise from a larger m.
Integer b_bound(const std::vector<Integer>& a);

// The four solutions attached to one odd factorization
// (2b+1)(2c+1) = J(a, m), each canonicalized. Requires 0 <= b <= c and the
// product to match.
std::vector<SolutionVector> solutions_from_factorization(
    const std::vector<Integer>& a, const Integer& m, const Integer& b,
    const Integer& c);

// Union of solutions_from_factorization over every odd factor pair of
// J(a, m), deduplicated.
std::set<SolutionVector> all_solutions_for(const std::vector<Integer>& a,
                                           const Integer& m);

// All distinct canonical neighbor moves of x.
std::vector<SolutionVector> neighbors_of(const SolutionVector& x);

// The unique neighbor of strictly smaller height, absent exactly at roots.
std::optional<SolutionVector> parent(const SolutionVector& x);

// Neighbors of strictly greater height, deduplicated, ascending.
std::vector<SolutionVector> children(const SolutionVector& x);

bool is_root(const SolutionVector& x);

// A discovered root along with the (a, m, b, c) witness whose factorization
// produced it.
struct RootWitness {
  std::vector<Integer> a;
  Integer m, b, c;
};

struct RootRecord {
  SolutionVector root;
  RootWitness witness;
};

// Scans every m in [0, b_bound(a)] and every odd factor pair of J(a, m),
// keeping the solutions that pass is_root. Always contains r_plus(a) and
// r_minus(a). Sorted by root coordinates.
std::vector<RootRecord> find_roots_extending(const std::vector<Integer>& a);

// The distinguished positive and negative roots over a:
// r_plus = (s^2 + ||a||^2, s^2 + ||a||^2, -s, a),
// r_minus = (-(s+1)^2 - ||a||^2, -(s+1)^2 - ||a||^2, -(s+1), a).
SolutionVector r_plus(const std::vector<Integer>& a);
SolutionVector r_minus(const std::vector<Integer>& a);

enum class BoundKind { max_height, max_depth, max_norm };

struct EnumerationBound {
  BoundKind kind = BoundKind::max_depth;
  Integer limit = 0;  // max_norm compares ||x||^2 against limit^2

  bool admits(const SolutionVector& x, long depth) const;
};

// Breadth-first traversal from a root: every vertex within the bound is
// emitted exactly once as emit(vertex, depth), level by level, children in
// ascending order, so output is byte-stable. jobs > 1 splits each level
// across threads; the emission order is unchanged. Heights, norms, and depth
// all grow strictly along root-to-leaf paths, so bound pruning loses
// nothing.
void enumerate_component(
    const SolutionVector& root, const EnumerationBound& bound,
    const std::function<void(const SolutionVector&, long)>& emit,
    int jobs = 1);

std::vector<SolutionVector> enumerate_to_vector(const SolutionVector& root,
                                                const EnumerationBound& bound,
                                                int jobs = 1);

// First all-non-negative vertex met by best-first (ascending height, then
// lexicographic) search from a positive root. Every positive component has
// one.
SolutionVector first_fair_in_component(const SolutionVector& root);

enum class Mod3Class { zero, e_j, other };
std::string to_string(Mod3Class c);

// Coordinate-wise reduction mod 3: all zeros, a permutation of
// (0, ..., 0, 1), or anything else. Vertices in the zero game's component
// only ever land in the first two classes.
Mod3Class mod3_class(const SolutionVector& x);

}  // namespace fairgame
