#include "fairgame/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <thread>

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

// all divisors d of v (odd) with d^2 <= v, from its factorization
std::vector<Integer> small_divisors(const Integer& v) {
  const Factorization f = factorize(v);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::vector<Integer> out;
  for (const Integer& d : divs) {
    if (d * d <= v) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Integer j_value(const std::vector<Integer>& a, const Integer& m) {
  if (m < 0) throw std::invalid_argument("j_value: m must be non-negative");
  const Integer s = sum_of(a);
  return m * m + m + 1 + 2 * (s * s + s + norm_sq_of(a));
}

Integer b_bound(const std::vector<Integer>& a) {
  const Integer s = sum_of(a);
  const Integer q2 = 2 * (s * s + s + norm_sq_of(a));  // >= 0 always
  // largest integer x with 3x^2 + 3x <= q2
  Integer x = (isqrt(9 + 12 * q2) - 3) / 6;
  while (3 * (x + 1) * (x + 1) + 3 * (x + 1) <= q2) ++x;
  while (x > 0 && 3 * x * x + 3 * x > q2) --x;
  return x;
}

std::vector<SolutionVector> solutions_from_factorization(
    const std::vector<Integer>& a, const Integer& m, const Integer& b,
    const Integer& c) {
  if (b < 0 || b > c) {
    throw std::invalid_argument("solutions_from_factorization: need 0 <= b <= c");
  }
  if ((2 * b + 1) * (2 * c + 1) != j_value(a, m)) {
    throw std::invalid_argument(
        "solutions_from_factorization: (2b+1)(2c+1) != J(a, m)");
  }
  const Integer s = sum_of(a);
  const auto make = [&a](Integer u, Integer v, Integer w) {
    std::vector<Integer> coords{std::move(u), std::move(v), std::move(w)};
    coords.insert(coords.end(), a.begin(), a.end());
    return SolutionVector(std::move(coords));
  };
  return {
      make(b - s, c - s, b + c + 1 - s + m),
      make(b - s, c - s, b + c - s - m),
      make(-(c + 1) - s, -(b + 1) - s, -(b + c + s + 1) + m),
      make(-(c + 1) - s, -(b + 1) - s, -(b + c + s + 2) - m),
  };
}

std::set<SolutionVector> all_solutions_for(const std::vector<Integer>& a,
                                           const Integer& m) {
  const Integer j = j_value(a, m);
  std::set<SolutionVector> out;
  for (const Integer& d : small_divisors(j)) {
    const Integer b = (d - 1) / 2;
    const Integer c = (j / d - 1) / 2;
    for (auto& s : solutions_from_factorization(a, m, b, c)) {
      out.insert(std::move(s));
    }
  }
  return out;
}

std::vector<SolutionVector> neighbors_of(const SolutionVector& x) {
  std::set<SolutionVector> seen;
  for (std::size_t k = 0; k < x.size(); ++k) seen.insert(neighbor(x, k));
  return {seen.begin(), seen.end()};
}

std::optional<SolutionVector> parent(const SolutionVector& x) {
  std::optional<SolutionVector> up;
  for (auto& nb : neighbors_of(x)) {
    if (nb.height() < x.height()) {
      if (up) throw std::logic_error("parent: two smaller-height neighbors");
      up = std::move(nb);
    }
  }
  return up;
}

std::vector<SolutionVector> children(const SolutionVector& x) {
  std::vector<SolutionVector> out;
  for (auto& nb : neighbors_of(x)) {
    if (nb.height() > x.height()) out.push_back(std::move(nb));
  }
  return out;  // neighbors_of is already ascending
}

bool is_root(const SolutionVector& x) {
  for (const auto& nb : neighbors_of(x)) {
    if (nb.height() <= x.height()) return false;
  }
  return true;
}

SolutionVector r_plus(const std::vector<Integer>& a) {
  const Integer s = sum_of(a);
  const Integer k = s * s + norm_sq_of(a);
  std::vector<Integer> coords{k, k, -s};
  coords.insert(coords.end(), a.begin(), a.end());
  return SolutionVector(std::move(coords));
}

SolutionVector r_minus(const std::vector<Integer>& a) {
  const Integer s = sum_of(a);
  const Integer k = -(s + 1) * (s + 1) - norm_sq_of(a);
  std::vector<Integer> coords{k, k, -(s + 1)};
  coords.insert(coords.end(), a.begin(), a.end());
  return SolutionVector(std::move(coords));
}

std::vector<RootRecord> find_roots_extending(const std::vector<Integer>& a) {
  std::map<SolutionVector, RootWitness> found;
  const Integer mmax = b_bound(a);
  for (Integer m = 0; m <= mmax; ++m) {
    const Integer j = j_value(a, m);
    for (const Integer& d : small_divisors(j)) {
      const Integer b = (d - 1) / 2;
      const Integer c = (j / d - 1) / 2;
      for (auto& sol : solutions_from_factorization(a, m, b, c)) {
        if (found.count(sol) || !is_root(sol)) continue;
        found.emplace(std::move(sol), RootWitness{a, m, b, c});
      }
    }
  }
  // the distinguished pair must always be rediscovered by the scan
  if (!found.count(r_plus(a)) || !found.count(r_minus(a))) {
    throw std::logic_error("find_roots_extending: scan missed r_plus/r_minus");
  }
  std::vector<RootRecord> out;
  out.reserve(found.size());
  for (auto& [root, wit] : found) out.push_back({root, wit});
  return out;
}

bool EnumerationBound::admits(const SolutionVector& x, long depth) const {
  switch (kind) {
    case BoundKind::max_height: return x.height() <= limit;
    case BoundKind::max_depth: return depth <= limit;
    case BoundKind::max_norm: return x.norm_sq() <= limit * limit;
  }
  return false;
}

void enumerate_component(
    const SolutionVector& root, const EnumerationBound& bound,
    const std::function<void(const SolutionVector&, long)>& emit, int jobs) {
  if (bound.limit < 0) {
    throw std::invalid_argument("enumerate_component: negative bound");
  }
  if (!is_root(root)) {
    throw std::invalid_argument("enumerate_component: start vertex is not a root");
  }
  if (!bound.admits(root, 0)) return;
  emit(root, 0);

  std::vector<SolutionVector> level{root};
  long depth = 0;
  while (!level.empty()) {
    ++depth;
    const auto expand = [&](const SolutionVector& v) {
      std::vector<SolutionVector> kids;
      for (auto& c : children(v)) {
        if (bound.admits(c, depth)) kids.push_back(std::move(c));
      }
      return kids;
    };

    std::vector<std::vector<SolutionVector>> per_vertex(level.size());
    if (jobs > 1 && level.size() > 64) {
      // split the level; order of the merged output is unaffected
      const std::size_t workers =
          std::min<std::size_t>(static_cast<std::size_t>(jobs), level.size());
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < level.size(); i += workers) {
            per_vertex[i] = expand(level[i]);
          }
        });
      }
      for (auto& t : pool) t.join();
    } else {
      for (std::size_t i = 0; i < level.size(); ++i) {
        per_vertex[i] = expand(level[i]);
      }
    }

    std::vector<SolutionVector> next;
    for (auto& kids : per_vertex) {
      for (auto& k : kids) {
        emit(k, depth);
        next.push_back(std::move(k));
      }
    }
    level = std::move(next);
  }
}

std::vector<SolutionVector> enumerate_to_vector(const SolutionVector& root,
                                                const EnumerationBound& bound,
                                                int jobs) {
  std::vector<SolutionVector> out;
  enumerate_component(
      root, bound, [&out](const SolutionVector& v, long) { out.push_back(v); },
      jobs);
  return out;
}

SolutionVector first_fair_in_component(const SolutionVector& root) {
  if (sign_of(root) != Sign::positive) {
    throw std::domain_error("first_fair_in_component: root must be positive");
  }
  // ascending height, ties broken lexicographically
  const auto cmp = [](const SolutionVector& a, const SolutionVector& b) {
    if (a.height() != b.height()) return a.height() > b.height();
    return a.coords() > b.coords();
  };
  std::priority_queue<SolutionVector, std::vector<SolutionVector>,
                      decltype(cmp)>
      queue(cmp);
  queue.push(root);
  while (!queue.empty()) {
    const SolutionVector v = queue.top();
    queue.pop();
    if (v.fair()) return v;
    for (auto& c : children(v)) queue.push(std::move(c));
  }
  throw std::logic_error("first_fair_in_component: search exhausted");
}

std::string to_string(Mod3Class c) {
  switch (c) {
    case Mod3Class::zero: return "zero";
    case Mod3Class::e_j: return "e_j";
    case Mod3Class::other: return "other";
  }
  return "?";
}

Mod3Class mod3_class(const SolutionVector& x) {
  std::size_t ones = 0, zeros = 0;
  for (const Integer& v : x.coords()) {
    const unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), 3);
    if (r == 0) ++zeros;
    if (r == 1) ++ones;
  }
  if (zeros == x.size()) return Mod3Class::zero;
  if (ones == 1 && zeros == x.size() - 1) return Mod3Class::e_j;
  return Mod3Class::other;
}

}  // namespace fairgame
