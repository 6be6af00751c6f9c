#pragma once

// Exact integer primitives: gcd, Bezout coefficients, modular powers,
// factorization and Euler's totient. Everything here is a pure function.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace diophant {

using Integer = mpz_class;

/// Number of bits in |x|; zero for x == 0.
std::size_t bit_length(const Integer& x);

/// Always nonnegative, gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

struct ExtGcd {
  Integer g;  // gcd(a, b), nonnegative
  Integer u;
  Integer v;  // a*u + b*v == g
};

ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// base^exp reduced into [0, modulus). Negative bases are reduced first.
/// Throws kInvalidArgument for exp < 0 or modulus < 1.
Integer mod_pow(const Integer& base, const Integer& exp,
                const Integer& modulus);

/// Miller-Rabin with a fixed base set: deterministic below 3.3e24, BPSW
/// above that.
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // primes strictly increasing

  Integer value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorOptions {
  // Trial division runs over all primes up to this bound.
  std::uint32_t trial_bound = 1'000'000;
  // Inputs wider than this are refused outright.
  std::size_t max_bits = 512;
  // Total Pollard-Brent iterations over the whole factorization.
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
};

/// Complete factorization of n >= 2. Throws kFactorizationLimitExceeded when
/// the effort budget runs out, never returns a partial answer.
Factorization factorize(const Integer& n, const FactorOptions& options = {});

/// phi(|n|) for n != 0; totient(+-1) == 1.
Integer totient(const Integer& n, const FactorOptions& options = {});

}  // namespace diophant
