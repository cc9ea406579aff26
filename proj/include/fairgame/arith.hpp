#pragma once

// Exact integer arithmetic underpinning the fair-game solvers: primality,
// factorization (trial division + Brent-cycle Pollard rho), square roots
// modulo odd prime powers (Tonelli-Shanks + Hensel lifting), and CRT
// recombination of quadratic congruences.

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fairgame {

using Integer = mpz_class;
using Rational = mpq_class;

using Deadline = std::chrono::steady_clock::time_point;
inline Deadline no_deadline() { return Deadline::max(); }

// Primes below 1e6, ascending. Built once on first use, then shared.
const std::vector<std::uint32_t>& small_primes();

// Floor square root; rejects negative input.
Integer isqrt(const Integer& n);

// m(m+1)/2; rejects negative input.
Integer triangular(const Integer& m);

// Fibonacci with the f_0 = f_1 = 1 convention (f_2 = 2, f_3 = 3, ...).
Integer fibonacci(unsigned long i);

// x(x-1)/2, defined for any sign of x. binom2(s+1) is the height-norm
// quantity C(s+1, 2).
Integer binom2(const Integer& x);

// Deterministic for every input the solvers produce: trial division decides
// n < 1e12 outright; larger n use a 12-base strong-probable-prime battery
// (proven deterministic below 3.3e24) plus a strong Lucas test.
bool is_prime(const Integer& n);

struct Factorization {
  Integer value;
  // (prime, exponent), primes strictly increasing.
  std::vector<std::pair<Integer, unsigned>> factors;
  // Composite cofactor a budgeted run failed to split; 1 when complete.
  Integer unfactored = 1;

  bool complete() const { return unfactored == 1; }
  Integer product() const;
};

// Full factorization of n >= 1; throws on n <= 0. n = 1 yields an empty
// factor list. Runs until done: trial division below 1e6, then Pollard rho
// with Brent cycling, retrying deterministically with an incremented
// polynomial constant whenever a cycle collapses.
Factorization factorize(const Integer& n);

// Same strategy, but rho gives up once the deadline passes; whatever
// composite remains is reported in `unfactored` instead of looping forever.
Factorization factorize_with_deadline(const Integer& n, Deadline deadline);

// All x in [0, p^e) with x^2 = a (mod p^e), ascending; empty when a is a
// non-residue. p must be an odd prime (even p rejected), e >= 1.
std::vector<Integer> sqrt_mod_prime_power(const Integer& a, const Integer& p,
                                          unsigned e);

// All x in [0, n) with x^2 = a (mod n) for odd n >= 1, via CRT recombination
// over the prime-power parts of n. n = 1 returns {0}.
std::vector<Integer> sqrts_mod(const Integer& a, const Integer& n);

enum class ResidueClass { P1, ThreeP1, Other };
std::string to_string(ResidueClass c);

// Classification of an odd n by its prime factorization: P1 when every
// prime factor is = 1 (mod 3); ThreeP1 when the exponent of 3 is exactly one
// and the rest are = 1 (mod 3); Other otherwise.
struct ResidueClassification {
  Integer value;
  ResidueClass cls;
  // Number of distinct primes != 3 dividing value (the exponent m of the
  // 2^{m-1} fixed-max-coordinate count).
  unsigned distinct_non3_prime_count = 0;
  Factorization factorization;
};

ResidueClassification classify_odd(const Integer& n);

// Budgeted variant. Returns a classification when it is already decidable:
// either the factorization completed, or a witness (a prime = 2 mod 3, or
// 3^2 | n) forces Other before completion. Returns nullopt when the budget
// ran out undecided. In the early-Other case distinct_non3_prime_count only
// counts the primes found so far.
std::optional<ResidueClassification> classify_odd_with_deadline(
    const Integer& n, Deadline deadline);

}  // namespace fairgame
