#pragma once

// Brute-force reference checks and random instance generators shared by the
// unit and acceptance suites. Nothing here calls into the solver.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "diophant/solution.hpp"

namespace diophant::testing {

inline long brute_gcd(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  long best = 0;
  for (long d = 1; d <= std::max(a, b); ++d) {
    if (a % d == 0 && b % d == 0) best = d;
  }
  return best;
}

inline long euclid_gcd(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long brute_totient(long n) {
  n = std::labs(n);
  long count = 0;
  for (long k = 1; k <= n; ++k) {
    if (euclid_gcd(k, n) == 1) ++count;
  }
  return count;
}

inline long naive_pow_mod(long base, long exp, long modulus) {
  long r = 1 % modulus;
  for (long i = 0; i < exp; ++i) r = (r * base) % modulus;
  return ((r % modulus) + modulus) % modulus;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::int64_t nonzero(std::mt19937_64& rng, std::int64_t bound) {
  for (;;) {
    std::int64_t v = uniform(rng, -bound, bound);
    if (v != 0) return v;
  }
}

/// s nonzero coefficients with |a_i| <= coeff_bound and rhs = gcd * n1.
inline Equation random_solvable(std::mt19937_64& rng, std::size_t s,
                                std::int64_t coeff_bound, std::int64_t n1_bound) {
  Equation eq;
  long g = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const std::int64_t a = nonzero(rng, coeff_bound);
    eq.coeffs.emplace_back(static_cast<long>(a));
    g = euclid_gcd(g, a);
  }
  eq.rhs = Integer(g) * static_cast<long>(uniform(rng, -n1_bound, n1_bound));
  return eq;
}

/// Each basis vector is kernel, the particular solves the equation.
inline bool sound(const Equation& eq, const GeneralSolution& sol) {
  if (dot(eq.coeffs, sol.particular) != eq.rhs) return false;
  for (const auto& b : sol.basis) {
    if (dot(eq.coeffs, b) != 0) return false;
  }
  return true;
}

inline IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline Equation equation(std::initializer_list<long> coeffs, long rhs) {
  return Equation{ints(coeffs), Integer(rhs)};
}

/// Rank over Q via fraction-free elimination.
inline std::size_t rational_rank(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Integer f = rows[r][c];
      const Integer g = rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * g - rows[rank][k] * f;
    }
    ++rank;
  }
  return rank;
}

}  // namespace diophant::testing
