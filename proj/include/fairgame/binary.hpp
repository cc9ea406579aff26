#pragma once

// Two-color games in closed form: every fair pair is a pair of consecutive
// triangular numbers, so counting reduces to integer square roots. The
// brute-force counters exist to check the formulas, not to be fast.

#include <array>

#include "fairgame/games.hpp"

namespace fairgame {

struct BinaryGame {
  Integer index;                // the parameter m
  std::array<Integer, 2> pair;  // (m(m-1)/2, m(m+1)/2)

  friend bool operator==(const BinaryGame&, const BinaryGame&) = default;
};

// The m-th fair pair. Requires m >= 0.
BinaryGame binary_game(const Integer& m);

// Number of fair pairs with Euclidean norm <= k: floor(sqrt(r(k))) + 1 for
// r(k) = (-1 + sqrt(1+8k^2))/2, evaluated with integer square roots only.
Integer count_f2(const Integer& k);

// floor(r(sqrt(k))): the number of positive triangular numbers <= k.
Integer count_c2(const Integer& k);

// Direct enumeration counterparts. count_f2_oracle matches count_f2
// exactly; count_c2_oracle counts the triangular number 0 as well and so
// exceeds the closed form by one everywhere.
Integer count_f2_oracle(const Integer& k);
Integer count_c2_oracle(const Integer& k);

}  // namespace fairgame
