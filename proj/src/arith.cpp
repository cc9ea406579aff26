#include "fairgame/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fairgame {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u32 kTrialLimit = 1'000'000;

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// Strong-probable-prime test to the given base; n odd > 2.
bool sprp_u64(u64 n, u64 base) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  u64 x = powmod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// The first-12-primes base set is deterministic for all n < 3.3e24, which
// covers the whole 64-bit range with room to spare.
constexpr u64 kSprpBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSprpBases) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  for (u64 b : kSprpBases) {
    if (!sprp_u64(n, b)) return false;
  }
  return true;
}

// Brent-cycle Pollard rho on a composite n with no prime factor below the
// trial limit. Deterministic: starts at y = 2, polynomial x^2 + c, and bumps
// c by one whenever a cycle swallows every divisor.
u64 brent_rho_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 steps = std::min(batch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      // batching overshot the divisor; replay one step at a time
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::map<Integer, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    acc[Integer(static_cast<unsigned long>(n))] += 1;
    return;
  }
  const u64 d = brent_rho_u64(n);
  split_u64(d, acc);
  split_u64(n / d, acc);
}

// Full factorization of a u64 value.
void factor_u64(u64 n, std::map<Integer, unsigned>& acc) {
  const auto& primes = small_primes();
  std::size_t i = 0;
  // cheap primes first, then a primality check so near-primes skip the
  // long tail of the trial loop
  for (; i < primes.size() && primes[i] < 1000; ++i) {
    const u64 p = primes[i];
    if (p * p > n) break;
    while (n % p == 0) { acc[Integer(static_cast<unsigned long>(p))] += 1; n /= p; }
  }
  if (n == 1) return;
  if (is_prime_u64(n)) { acc[Integer(static_cast<unsigned long>(n))] += 1; return; }
  for (; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (p * p > n) break;
    if (n % p == 0) {
      while (n % p == 0) { acc[Integer(static_cast<unsigned long>(p))] += 1; n /= p; }
      if (n == 1) return;
      if (is_prime_u64(n)) { acc[Integer(static_cast<unsigned long>(n))] += 1; return; }
    }
  }
  split_u64(n, acc);
}

bool fits_u64(const Integer& n) {
  return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const Integer& n) {
  u64 lo = mpz_getlimbn(n.get_mpz_t(), 0);
  return mpz_size(n.get_mpz_t()) == 0 ? 0 : lo;
}

Integer powm(const Integer& base, const Integer& e, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

bool sprp_mpz(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x = powm(Integer(base), d, n);
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

// Strong Lucas probable-prime test with Selfridge parameter selection
// (method A): first D in 5, -7, 9, -11, ... with (D/n) = -1, P = 1,
// Q = (1 - D)/4. Combined with the base-2 strong test this is the usual
// Baillie-PSW battery, which has no known composite passing it.
bool strong_lucas_mpz(const Integer& n) {
  Integer D = 5;
  while (true) {
    const int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(D) != n) return false;  // shares a factor with n
    D = D > 0 ? Integer(-(D + 2)) : Integer(-(D - 2));
  }
  const Integer Q = (1 - D) / 4;

  Integer d = n + 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // halve x mod odd n
  const auto half = [&n](Integer x) {
    x %= n;
    if (x < 0) x += n;
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    x >>= 1;
    return x;
  };

  // Lucas chain for U_d, V_d (P = 1), tracking Q^k alongside
  Integer U = 1, V = 1, Qk = Q % n;  // values at index 1
  const long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  for (long i = bits - 2; i >= 0; --i) {
    // double: (U, V)_k -> (U, V)_{2k}
    U = U * V % n;
    V = (V * V - 2 * Qk) % n;
    Qk = Qk * Qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<unsigned long>(i))) {
      // increment: (U, V)_{2k} -> (U, V)_{2k+1}
      const Integer Unew = half(U + V);
      V = half(D * U + V);
      U = Unew;
      Qk = Qk * Q % n;
    }
  }

  U %= n;
  if (U == 0) return true;
  V %= n;
  if (V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = (V * V - 2 * Qk) % n;
    if (V == 0) return true;
    Qk = Qk * Qk % n;
  }
  return false;
}

std::optional<Integer> brent_rho_mpz(const Integer& n, Deadline deadline) {
  const bool timed = deadline != no_deadline();
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    u64 r = 1;
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 steps = std::min(batch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        if (timed && std::chrono::steady_clock::now() >= deadline) {
          return std::nullopt;
        }
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Newton lifting of a square root from mod p to mod p^e; a must be a unit
// and x a root of x^2 = a (mod p).
Integer hensel_lift(const Integer& a, const Integer& p, unsigned e, Integer x) {
  unsigned k = 1;
  while (k < e) {
    k = std::min(2 * k, e);
    const Integer mod = pow_ui(p, k);
    Integer inv_x, inv2;
    mpz_invert(inv_x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    mpz_invert(inv2.get_mpz_t(), Integer(2).get_mpz_t(), mod.get_mpz_t());
    const Integer am = ((a % mod) + mod) % mod;
    x = (x + am * inv_x) % mod * inv2 % mod;
  }
  return x;
}

// Both square roots of a modulo an odd prime p; requires a to be a unit
// residue (legendre(a, p) = 1).
std::pair<Integer, Integer> tonelli_shanks(const Integer& a, const Integer& p) {
  Integer q = p - 1;
  const unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  Integer x;
  if (s == 1) {  // p = 3 (mod 4)
    x = powm(a, (p + 1) / 4, p);
  } else {
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Integer c = powm(z, q, p);
    Integer t = powm(a, q, p);
    x = powm(a, (q + 1) / 2, p);
    unsigned long m = s;
    while (t != 1) {
      Integer tt = t;
      unsigned long i = 0;
      while (tt != 1) {
        tt = tt * tt % p;
        ++i;
      }
      Integer b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      x = x * b % p;
    }
  }
  Integer other = p - x;
  if (x > other) std::swap(x, other);
  return {x, other};
}

ResidueClassification classify_from_factors(const Integer& n,
                                            Factorization f) {
  ResidueClassification rc;
  rc.value = n;
  unsigned v3 = 0;
  unsigned m = 0;
  bool bad = false;
  for (const auto& [p, e] : f.factors) {
    if (p == 3) {
      v3 = e;
    } else {
      ++m;
      if (p % 3 != 1) bad = true;
    }
  }
  rc.distinct_non3_prime_count = m;
  if (bad || v3 >= 2) {
    rc.cls = ResidueClass::Other;
  } else {
    rc.cls = v3 == 1 ? ResidueClass::ThreeP1 : ResidueClass::P1;
  }
  rc.factorization = std::move(f);
  return rc;
}

}  // namespace

const std::vector<u32>& small_primes() {
  static const std::vector<u32> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<u32> ps;
    for (u32 i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (u64 j = u64(i) * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer triangular(const Integer& m) {
  if (m < 0) throw std::domain_error("triangular: negative input");
  return m * (m + 1) / 2;
}

Integer fibonacci(unsigned long i) {
  // the f_0 = f_1 = 1 convention is the classical F shifted by one
  Integer r;
  mpz_fib_ui(r.get_mpz_t(), i + 1);
  return r;
}

Integer binom2(const Integer& x) { return x * (x - 1) / 2; }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  const auto& primes = small_primes();
  for (std::size_t i = 0; i < 2000; ++i) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i])) return false;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  for (u64 b : kSprpBases) {
    if (!sprp_mpz(n, static_cast<unsigned long>(b))) return false;
  }
  return strong_lucas_mpz(n);
}

Integer Factorization::product() const {
  Integer r = unfactored;
  for (const auto& [p, e] : factors) r *= pow_ui(p, e);
  return r;
}

Factorization factorize_with_deadline(const Integer& n, Deadline deadline) {
  if (n <= 0) throw std::invalid_argument("factorize: input must be positive");
  Factorization f;
  f.value = n;
  if (n == 1) return f;

  std::map<Integer, unsigned> acc;
  Integer rem = n;
  if (!fits_u64(rem)) {
    // strip every prime below the trial limit; p^2 <= rem holds throughout
    // because rem stays above 2^64
    for (u32 p : small_primes()) {
      if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
      unsigned e = 0;
      do {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
      acc[Integer(static_cast<unsigned long>(p))] += e;
      if (fits_u64(rem)) break;
    }
  }

  std::vector<Integer> pending;
  if (rem != 1) pending.push_back(rem);
  while (!pending.empty()) {
    Integer t = pending.back();
    pending.pop_back();
    if (fits_u64(t)) {
      factor_u64(to_u64(t), acc);
      continue;
    }
    if (is_prime(t)) {
      acc[t] += 1;
      continue;
    }
    const auto d = brent_rho_mpz(t, deadline);
    if (!d) {
      f.unfactored *= t;  // budget exhausted; hand back the composite
      continue;
    }
    pending.push_back(*d);
    pending.push_back(t / *d);
  }

  f.factors.assign(acc.begin(), acc.end());
  return f;
}

Factorization factorize(const Integer& n) {
  return factorize_with_deadline(n, no_deadline());
}

std::vector<Integer> sqrt_mod_prime_power(const Integer& a, const Integer& p,
                                          unsigned e) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw std::invalid_argument("sqrt_mod_prime_power: p must be an odd prime");
  }
  if (e == 0) throw std::invalid_argument("sqrt_mod_prime_power: e must be >= 1");

  const Integer pe = pow_ui(p, e);
  Integer a0 = a % pe;
  if (a0 < 0) a0 += pe;

  std::vector<Integer> out;
  if (a0 == 0) {
    // x^2 = 0 (mod p^e) iff p^ceil(e/2) | x
    const Integer step = pow_ui(p, (e + 1) / 2);
    const Integer count = pow_ui(p, e / 2);
    for (Integer t = 0; t < count; ++t) out.push_back(t * step);
    return out;
  }

  unsigned v = 0;
  Integer u = a0;
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  if (v % 2 != 0) return {};  // odd p-adic valuation: no square root

  const unsigned e2 = e - v;
  const Integer up = u % p;
  if (mpz_legendre(up.get_mpz_t(), p.get_mpz_t()) != 1) return {};
  const auto [r1, r2] = tonelli_shanks(up, p);
  (void)r2;
  const Integer y = hensel_lift(u, p, e2, r1);

  const Integer pe2 = pow_ui(p, e2);
  const Integer ph = pow_ui(p, v / 2);
  for (const Integer& y0 : {y, Integer(pe2 - y)}) {
    for (Integer t = 0; t < ph; ++t) out.push_back(ph * (y0 + t * pe2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> sqrts_mod(const Integer& a, const Integer& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t())) {
    throw std::invalid_argument("sqrts_mod: n must be odd and positive");
  }
  if (n == 1) return {0};

  const Factorization f = factorize(n);
  std::vector<Integer> res{0};
  Integer mod = 1;
  for (const auto& [p, e] : f.factors) {
    const auto part = sqrt_mod_prime_power(a, p, e);
    if (part.empty()) return {};
    const Integer pe = pow_ui(p, e);
    Integer minv;
    mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), pe.get_mpz_t());
    std::vector<Integer> next;
    next.reserve(res.size() * part.size());
    for (const Integer& r : res) {
      for (const Integer& y : part) {
        Integer t = (y - r) * minv % pe;
        if (t < 0) t += pe;
        next.push_back(r + mod * t);
      }
    }
    res = std::move(next);
    mod *= pe;
  }
  std::sort(res.begin(), res.end());
  return res;
}

std::string to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::P1: return "P1";
    case ResidueClass::ThreeP1: return "ThreeP1";
    case ResidueClass::Other: return "Other";
  }
  return "?";
}

ResidueClassification classify_odd(const Integer& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t())) {
    throw std::invalid_argument("classify_odd: n must be odd and positive");
  }
  return classify_from_factors(n, factorize(n));
}

std::optional<ResidueClassification> classify_odd_with_deadline(
    const Integer& n, Deadline deadline) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t())) {
    throw std::invalid_argument("classify_odd: n must be odd and positive");
  }
  Factorization f = factorize_with_deadline(n, deadline);
  if (f.complete()) return classify_from_factors(n, std::move(f));
  // Partial information can still force Other: a visible bad prime, a
  // second power of 3, or an unfactored cofactor = 2 (mod 3), which must
  // contain a prime = 2 (mod 3).
  bool bad = f.unfactored % 3 == 2;
  for (const auto& [p, e] : f.factors) {
    if (p == 3 && e >= 2) bad = true;
    if (p != 3 && p % 3 != 1) bad = true;
  }
  if (!bad) return std::nullopt;
  ResidueClassification rc = classify_from_factors(n, std::move(f));
  rc.cls = ResidueClass::Other;
  return rc;
}

}  // namespace fairgame
