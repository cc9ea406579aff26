#pragma once

// The fair matching game for two drawn balls: the quadratic F_n, fairness
// predicates, exact and simulated win probabilities, and the Vieta
// neighbor move that swaps one coordinate for the other root of its
// quadratic.

#include <cstdint>
#include <vector>

#include "fairgame/arith.hpp"

namespace fairgame {

// F_n(x) = s^2 - s - 4p with s the coordinate sum and p the sum over
// unordered pairs x_i x_j. Requires n >= 2.
Integer eval_fair_poly(const std::vector<Integer>& x);

// True iff every coordinate is non-negative and F_n vanishes: the bag wins
// with probability exactly 1/2.
bool is_fair_game(const std::vector<Integer>& x);

// An integer solution of F_n = 0, stored ascending (solutions are
// identified up to permutation). Construction sorts, then checks the
// solution property along with the identities every solution satisfies:
// C(s+1, 2) = ||x||^2 and s = 0 or 1 (mod 4).
class SolutionVector {
 public:
  explicit SolutionVector(std::vector<Integer> coords);

  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& sum() const { return sum_; }
  const Integer& norm_sq() const { return norm_sq_; }
  const Integer& height() const { return height_; }  // |1 + s|
  bool fair() const;                                 // all coordinates >= 0

  friend bool operator==(const SolutionVector& a, const SolutionVector& b) {
    return a.coords_ == b.coords_;
  }
  friend auto operator<=>(const SolutionVector& a, const SolutionVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Integer> coords_;
  Integer sum_;
  Integer norm_sq_;
  Integer height_;
};

enum class Sign { positive, negative };
std::string to_string(Sign s);

// Sign of s + 1, which is also the common sign of every 2s_ij + 1. The sign
// is constant on tree components and positive components hold all the fair
// games. s = -1 cannot occur (s = 0 or 1 mod 4).
Sign sign_of(const SolutionVector& x);

// Vieta move on coordinate k of the ascending tuple: replaces x_k by
// b_k = 2(s - x_k) + 1 - x_k, the other root of the quadratic in x_k.
SolutionVector neighbor(const SolutionVector& x, std::size_t k);

// The two fair n-games over a fair (n-1)-game: append 0, or append 1 + 2s.
// The second keeps faithfulness (every color present).
std::pair<std::vector<Integer>, std::vector<Integer>> extend_game(
    const std::vector<Integer>& fair_game);

// Exact win probability sum_i C(x_i, 2) / C(s, 2) for a bag with s >= 2;
// equals 1/2 iff F_n(x) = 0.
Rational win_probability(const std::vector<Integer>& bag);

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  Rational rate;  // wins / trials, exact
};

// Draws two balls without replacement `trials` times and counts matches.
// Fully reproducible: a fixed 64-bit generator plus rejection sampling, so
// the byte stream depends only on (bag, trials, seed).
SimulationResult simulate_game(const std::vector<Integer>& bag,
                               std::uint64_t trials, std::uint64_t seed);

}  // namespace fairgame
