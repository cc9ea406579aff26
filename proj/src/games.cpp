#include "fairgame/games.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fairgame {

namespace {

Integer sum_of(const std::vector<Integer>& x) {
  Integer s = 0;
  for (const Integer& v : x) s += v;
  return s;
}

Integer norm_sq_of(const std::vector<Integer>& x) {
  Integer n = 0;
  for (const Integer& v : x) n += v * v;
  return n;
}

// uniform draw from [0, bound) by rejection; bound >= 1
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t min = (-bound) % bound;  // 2^64 mod bound
  std::uint64_t r;
  do {
    r = rng();
  } while (r < min);
  return r % bound;
}

}  // namespace

Integer eval_fair_poly(const std::vector<Integer>& x) {
  if (x.size() < 2) {
    throw std::invalid_argument("eval_fair_poly: need at least two colors");
  }
  // s^2 - s - 4p = 2||x||^2 - s^2 - s, since 2p = s^2 - ||x||^2
  const Integer s = sum_of(x);
  return 2 * norm_sq_of(x) - s * s - s;
}

bool is_fair_game(const std::vector<Integer>& x) {
  if (x.size() < 2) return false;
  for (const Integer& v : x) {
    if (v < 0) return false;
  }
  return eval_fair_poly(x) == 0;
}

SolutionVector::SolutionVector(std::vector<Integer> coords)
    : coords_(std::move(coords)) {
  std::sort(coords_.begin(), coords_.end());
  if (eval_fair_poly(coords_) != 0) {
    throw std::invalid_argument("SolutionVector: F_n does not vanish");
  }
  sum_ = sum_of(coords_);
  norm_sq_ = norm_sq_of(coords_);
  height_ = abs(sum_ + 1);
  // consequences of F_n = 0; cheap to keep as hard checks
  if (binom2(Integer(sum_ + 1)) != norm_sq_) {
    throw std::logic_error("SolutionVector: height-norm identity failed");
  }
  const unsigned long r = mpz_fdiv_ui(sum_.get_mpz_t(), 4);
  if (r != 0 && r != 1) {
    throw std::logic_error("SolutionVector: sum must be 0 or 1 mod 4");
  }
}

bool SolutionVector::fair() const { return coords_.front() >= 0; }

std::string to_string(Sign s) {
  return s == Sign::positive ? "positive" : "negative";
}

Sign sign_of(const SolutionVector& x) {
  const Sign sign = x.sum() + 1 > 0 ? Sign::positive : Sign::negative;
#ifndef NDEBUG
  // every 2s_ij + 1 carries the same sign
  const auto& c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Integer t = 2 * (x.sum() - c[i] - c[j]) + 1;
      if ((t > 0) != (sign == Sign::positive)) {
        throw std::logic_error("sign_of: 2s_ij + 1 signs disagree");
      }
    }
  }
#endif
  return sign;
}

SolutionVector neighbor(const SolutionVector& x, std::size_t k) {
  if (k >= x.size()) throw std::out_of_range("neighbor: index out of range");
  std::vector<Integer> c = x.coords();
  c[k] = 2 * (x.sum() - c[k]) + 1 - c[k];
  return SolutionVector(std::move(c));
}

std::pair<std::vector<Integer>, std::vector<Integer>> extend_game(
    const std::vector<Integer>& fair_game) {
  if (!is_fair_game(fair_game)) {
    throw std::invalid_argument("extend_game: input is not a fair game");
  }
  std::vector<Integer> with_zero = fair_game;
  with_zero.push_back(0);
  std::sort(with_zero.begin(), with_zero.end());

  std::vector<Integer> with_big = fair_game;
  with_big.push_back(1 + 2 * sum_of(fair_game));
  std::sort(with_big.begin(), with_big.end());
  return {std::move(with_zero), std::move(with_big)};
}

Rational win_probability(const std::vector<Integer>& bag) {
  Integer s = 0, matches = 0;
  for (const Integer& v : bag) {
    if (v < 0) throw std::invalid_argument("win_probability: negative count");
    s += v;
    matches += binom2(v);
  }
  if (s < 2) throw std::domain_error("win_probability: trivial game");
  Rational r(matches, binom2(s));
  r.canonicalize();
  return r;
}

SimulationResult simulate_game(const std::vector<Integer>& bag,
                               std::uint64_t trials, std::uint64_t seed) {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const Integer& v : bag) {
    if (v < 0) throw std::invalid_argument("simulate_game: negative count");
    if (!v.fits_ulong_p()) {
      throw std::invalid_argument("simulate_game: count too large to sample");
    }
    const std::uint64_t c = v.get_ui();
    if (total > UINT64_MAX - c) {
      throw std::invalid_argument("simulate_game: bag too large to sample");
    }
    counts.push_back(c);
    total += c;
  }
  if (total < 2) throw std::domain_error("simulate_game: trivial game");
  if (trials == 0) throw std::invalid_argument("simulate_game: zero trials");

  std::mt19937_64 rng(seed);
  std::uint64_t wins = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t first = bounded(rng, total);
    std::size_t color = 0;
    while (first >= counts[color]) first -= counts[color], ++color;

    std::uint64_t second = bounded(rng, total - 1);
    // the drawn ball is gone; its color has one fewer
    std::size_t color2 = 0;
    for (;; ++color2) {
      const std::uint64_t c = counts[color2] - (color2 == color ? 1 : 0);
      if (second < c) break;
      second -= c;
    }
    if (color == color2) ++wins;
  }

  SimulationResult res;
  res.trials = trials;
  res.wins = wins;
  res.rate = Rational(Integer(static_cast<unsigned long>(wins)),
                      Integer(static_cast<unsigned long>(trials)));
  res.rate.canonicalize();
  return res;
}

}  // namespace fairgame
