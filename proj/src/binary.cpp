#include "fairgame/binary.hpp"

#include <stdexcept>

namespace fairgame {

BinaryGame binary_game(const Integer& m) {
  if (m < 0) {
    throw std::invalid_argument("index must be non-negative");
  }
  BinaryGame g{m, {m * (m - 1) / 2, m * (m + 1) / 2}};
  if (eval_fair_poly({g.pair[0], g.pair[1]}) != 0) {
    throw std::logic_error("consecutive triangular numbers must be fair");
  }
  return g;
}

Integer count_f2(const Integer& k) {
  if (k < 0) {
    throw std::invalid_argument("radius must be non-negative");
  }
  // The m-th pair has squared norm m^2(m^2+1)/2, so it lies in the ball
  // iff (2m^2+1)^2 <= 1+8k^2; solve for the largest m without floats.
  const Integer s = isqrt(1 + 8 * k * k);
  return isqrt((s - 1) / 2) + 1;
}

Integer count_c2(const Integer& k) {
  if (k < 0) {
    throw std::invalid_argument("bound must be non-negative");
  }
  // t(t+1)/2 <= k iff (2t+1)^2 <= 8k+1.
  return (isqrt(8 * k + 1) - 1) / 2;
}

Integer count_f2_oracle(const Integer& k) {
  if (k < 0) {
    throw std::invalid_argument("radius must be non-negative");
  }
  const Integer cap = 2 * k * k;
  Integer count = 0;
  for (Integer m = 0; m * m * (m * m + 1) <= cap; ++m) {
    ++count;
  }
  return count;
}

Integer count_c2_oracle(const Integer& k) {
  if (k < 0) {
    throw std::invalid_argument("bound must be non-negative");
  }
  Integer count = 0;
  for (Integer t = 0; t * (t + 1) / 2 <= k; ++t) {
    ++count;
  }
  return count;
}

}  // namespace fairgame
