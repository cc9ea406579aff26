#include "fairgame/ternary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

namespace fairgame {

namespace {

std::array<Integer, 3> sorted3(std::array<Integer, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

bool trivial_triple(const std::array<Integer, 3>& t) {
  return t[0] == 0 && t[1] == 0 && (t[2] == 0 || t[2] == 1);
}

const std::array<Integer, 3> tree_root{0, 1, 3};

Integer fair_value(const std::array<Integer, 3>& t) {
  return eval_fair_poly({t[0], t[1], t[2]});
}

}  // namespace

TernaryGame::TernaryGame(std::array<Integer, 3> coords)
    : triple(sorted3(std::move(coords))) {
  if (triple[0] < 0) {
    throw std::invalid_argument("game coordinates must be non-negative");
  }
  if (fair_value(triple) != 0) {
    throw std::invalid_argument("triple is not a fair game");
  }
  if (trivial_triple(triple)) {
    return;
  }
  // Walk parent moves down to (0,1,3). The move replaces the largest
  // coordinate, strictly decreasing it, and every non-trivial fair triple
  // reaches the root this way, so termination doubles as validation.
  std::array<Integer, 3> cur = triple;
  long d = 0;
  while (cur != tree_root) {
    Integer back = 2 * (cur[0] + cur[1]) + 1 - cur[2];
    if (back < 0 || back >= cur[2]) {
      throw std::logic_error("parent walk failed to descend");
    }
    cur = sorted3({cur[0], cur[1], back});
    if (trivial_triple(cur)) {
      throw std::logic_error("parent walk left the tree");
    }
    ++d;
  }
  depth = d;
}

bool c3_contains(const Integer& c) {
  if (c < 0) {
    throw std::invalid_argument("coordinates of games are non-negative");
  }
  return classify_odd(2 * c + 1).cls != ResidueClass::Other;
}

bool c3_contains_residue(const Integer& c) {
  if (c < 0) {
    throw std::invalid_argument("coordinates of games are non-negative");
  }
  const Integer n = 2 * c + 1;
  return !sqrts_mod(-(c * (c - 1)), n).empty();
}

std::vector<TernaryGame> games_with_coordinate(const Integer& c,
                                               const Integer& u_lo,
                                               const Integer& u_hi) {
  if (!c3_contains(c)) {
    throw std::invalid_argument("coordinate outside C3");
  }
  const Integer n = 2 * c + 1;
  const Integer q = c * (c - 1);
  std::set<TernaryGame> games;
  for (const Integer& r : sqrts_mod(-q, n)) {
    // First u >= u_lo in the residue class of r, then step by the modulus.
    Integer steps;
    mpz_cdiv_q(steps.get_mpz_t(), Integer(u_lo - r).get_mpz_t(),
               n.get_mpz_t());
    for (Integer u = r + steps * n; u <= u_hi; u += n) {
      Integer x1, rem;
      mpz_fdiv_qr(x1.get_mpz_t(), rem.get_mpz_t(),
                  Integer(u * u + n * u + q).get_mpz_t(),
                  Integer(2 * n).get_mpz_t());
      if (rem != 0) {
        throw std::logic_error("parametrized numerator not divisible");
      }
      games.insert(TernaryGame({x1, x1 - u, c}));
    }
  }
  return {games.begin(), games.end()};
}

std::vector<TernaryGame> games_with_max_coordinate(const Integer& c) {
  if (c <= 1) {
    throw std::invalid_argument("largest-coordinate window requires c > 1");
  }
  // [0, c] picks one representative of each +-u pair mod 2c+1, and every u
  // in it yields x1, x2 <= 2c^2/(2c+1) < c, so c is the strict maximum.
  std::vector<TernaryGame> games = games_with_coordinate(c, 0, c);
  for (const TernaryGame& g : games) {
    if (g.triple[2] != c) {
      throw std::logic_error("window produced a coordinate above c");
    }
  }
  return games;
}

Integer count_max_coordinate(const Integer& c) {
  if (c <= 1) {
    throw std::invalid_argument("largest-coordinate count requires c > 1");
  }
  const ResidueClassification r = classify_odd(2 * c + 1);
  if (r.cls == ResidueClass::Other) {
    throw std::invalid_argument("coordinate outside C3");
  }
  if (r.distinct_non3_prime_count == 0) {
    throw std::logic_error("2c+1 > 3 must have a prime factor other than 3");
  }
  return Integer(1) << (r.distinct_non3_prime_count - 1);
}

std::vector<Integer> c3_list(const Integer& limit) {
  if (limit < 0) {
    throw std::invalid_argument("limit must be non-negative");
  }
  std::vector<Integer> members;
  for (Integer c = 0; c <= limit; ++c) {
    if (c3_contains(c)) {
      members.push_back(c);
    }
  }
  return members;
}

Rational c3_density(const Integer& limit) {
  if (limit <= 0) {
    throw std::invalid_argument("density is undefined at limit 0");
  }
  Integer count = 0;
  for (Integer c = 0; c <= limit; ++c) {
    if (c3_contains(c)) {
      ++count;
    }
  }
  Rational density(count, limit);
  density.canonicalize();
  return density;
}

TernaryGame left_child(const TernaryGame& g) {
  if (g.trivial()) {
    throw std::invalid_argument("trivial games are outside the binary tree");
  }
  const auto& t = g.triple;
  return TernaryGame({t[0], t[2], 2 * (t[0] + t[2]) + 1 - t[1]});
}

TernaryGame right_child(const TernaryGame& g) {
  if (g.trivial()) {
    throw std::invalid_argument("trivial games are outside the binary tree");
  }
  const auto& t = g.triple;
  return TernaryGame({t[1], t[2], 2 * (t[1] + t[2]) + 1 - t[0]});
}

TernaryGame tree_parent(const TernaryGame& g) {
  if (g.trivial()) {
    throw std::invalid_argument("trivial games are outside the binary tree");
  }
  const auto& t = g.triple;
  return TernaryGame({t[0], t[1], 2 * (t[0] + t[1]) + 1 - t[2]});
}

namespace {

// (m_k, m_{k+1}, m_{k+2}) by the defining recurrence.
std::array<Integer, 3> m_window(long k) {
  std::array<Integer, 3> w{0, 1, 3};
  for (long i = 0; i < k; ++i) {
    Integer next = 2 * (w[1] + w[2]) + 1 - w[0];
    w = {w[1], w[2], std::move(next)};
  }
  return w;
}

}  // namespace

TernaryGame min_norm_node(long k) {
  if (k < 0) {
    throw std::invalid_argument("depth must be non-negative");
  }
  return TernaryGame({0, binom2(Integer(k) + 2), binom2(Integer(k) + 3)});
}

TernaryGame max_norm_node(long k) {
  if (k < 0) {
    throw std::invalid_argument("depth must be non-negative");
  }
  return TernaryGame(m_window(k));
}

Integer m_sequence(long k) {
  if (k < 0) {
    throw std::invalid_argument("index must be non-negative");
  }
  return m_window(k)[0];
}

LorentzPoint::LorentzPoint(Integer w1_in, Integer w2_in, Integer w3_in)
    : w1(std::move(w1_in)), w2(std::move(w2_in)), w3(std::move(w3_in)) {
  if (w1 * w1 + w2 * w2 - w3 * w3 != -3) {
    throw std::invalid_argument("point is not on the quadric");
  }
  // Structural facts that hold for every quadric point; violation means the
  // arithmetic above is broken, not bad input.
  if (abs(w3) <= abs(w1) || abs(w3) <= abs(w2)) {
    throw std::logic_error("third coordinate must dominate");
  }
  const bool odd1 = mpz_odd_p(w1.get_mpz_t()) != 0;
  const bool odd2 = mpz_odd_p(w2.get_mpz_t()) != 0;
  if (odd1 == odd2 || mpz_odd_p(w3.get_mpz_t())) {
    throw std::logic_error("exactly one of w1, w2 is odd and w3 is even");
  }
  if (w1 == w2) {
    throw std::logic_error("w1 and w2 differ for quadric points");
  }
}

LorentzPoint to_lorentz(const std::array<Integer, 3>& x) {
  if (x[0] > x[1] || x[1] > x[2]) {
    throw std::invalid_argument("solution triple must be ascending");
  }
  if (eval_fair_poly({x[0], x[1], x[2]}) != 0) {
    throw std::invalid_argument("triple is not a solution");
  }
  return {2 * (x[1] - x[2]), 2 * (x[0] - x[1] - x[2]) - 1,
          2 * (x[1] + x[2] + 1)};
}

std::array<Integer, 3> from_lorentz(const LorentzPoint& w) {
  if (mpz_even_p(w.w2.get_mpz_t())) {
    throw std::invalid_argument(
        "inverse is defined on the odd-w2 class representative");
  }
  const Integer top = w.w2 + w.w3 - 1;
  const Integer mid = w.w1 + w.w3 - 2;
  const Integer low = w.w3 - w.w1 - 2;
  if (!mpz_divisible_ui_p(top.get_mpz_t(), 2) ||
      !mpz_divisible_ui_p(mid.get_mpz_t(), 4) ||
      !mpz_divisible_ui_p(low.get_mpz_t(), 4)) {
    throw std::invalid_argument("coordinates fail the divisibility pattern");
  }
  std::array<Integer, 3> x{top / 2, mid / 4, low / 4};
  if (eval_fair_poly({x[0], x[1], x[2]}) != 0) {
    throw std::logic_error("inverse image is not a solution");
  }
  return x;
}

namespace {

std::int64_t isqrt_i64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

}  // namespace

void for_each_lorentz_point(
    std::uint64_t k,
    const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn) {
  if (k > 1000000000ULL) {
    throw std::invalid_argument("scan radius above the 64-bit safe range");
  }
  const auto radius = static_cast<std::int64_t>(k);
  const std::int64_t k2 = radius * radius;
  // On the quadric the Euclidean norm is 2*w3^2 - 3, so the ball condition
  // only constrains w3; enumerate even w3 > 0 and emit both signs.
  for (std::int64_t w3 = 2; 2 * w3 * w3 - 3 <= k2; w3 += 2) {
    const std::int64_t target = w3 * w3 - 3;
    // Two-pointer scan over a <= b with a^2 + b^2 = target. The parity of
    // target is odd, so a == b never happens.
    std::int64_t a = 0;
    std::int64_t b = isqrt_i64(target);
    while (a <= b) {
      const std::int64_t s = a * a + b * b;
      if (s == target) {
        for (std::int64_t sign3 : {w3, -w3}) {
          if (a == 0) {
            fn(0, b, sign3);
            fn(0, -b, sign3);
            fn(b, 0, sign3);
            fn(-b, 0, sign3);
          } else {
            fn(a, b, sign3);
            fn(a, -b, sign3);
            fn(-a, b, sign3);
            fn(-a, -b, sign3);
            fn(b, a, sign3);
            fn(b, -a, sign3);
            fn(-b, a, sign3);
            fn(-b, -a, sign3);
          }
        }
        ++a;
        --b;
      } else if (s < target) {
        ++a;
      } else {
        --b;
      }
    }
  }
}

namespace {

template <typename Pred>
std::uint64_t count_points(std::uint64_t k, Pred&& pred) {
  std::uint64_t n = 0;
  for_each_lorentz_point(
      k, [&](std::int64_t w1, std::int64_t w2, std::int64_t w3) {
        if (pred(w1, w2, w3)) {
          ++n;
        }
      });
  return n;
}

}  // namespace

std::uint64_t count_lorentz(std::uint64_t k) {
  return count_points(k, [](std::int64_t, std::int64_t, std::int64_t) {
    return true;
  });
}

std::uint64_t count_s3_ellipsoid(std::uint64_t k) {
  return count_points(k, [](std::int64_t, std::int64_t w2, std::int64_t) {
    return (w2 & 1) != 0;
  });
}

std::uint64_t count_f3_ellipsoid(std::uint64_t k) {
  return count_points(
      k, [](std::int64_t w1, std::int64_t w2, std::int64_t w3) {
        return (w2 & 1) != 0 && w1 <= 0 && w2 <= 0 && w3 >= 0;
      });
}

}  // namespace fairgame
