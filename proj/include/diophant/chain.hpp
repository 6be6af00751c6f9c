#pragma once

// gcd-chain decomposition of a coefficient vector a_1..a_s.
//
// Index mapping (this is the only place it is spelled out): vectors are
// 0-based, the mathematical symbols are 1-based.
//   a[i]        = a_{i+1}                      i = 0..s-1
//   d_chain[j]  = d_{j+2}                      j = 0..s-2  (d_chain.back() == d)
//   a_bar[i]    = a_{i+1} / chain divisor      i = 0..s-1
//   d_bar[j]    = dbar_{j+1}                   j = 0..s-2  (d_bar[0] == a_bar[0])
// with d_2 = (a_1, a_2), d_i = (d_{i-1}, a_i), a_1 = d_2 abar_1,
// a_i = d_i abar_i (i >= 2) and d_i = d_{i+1} dbar_i (2 <= i <= s-1).

#include <cstddef>
#include <span>
#include <vector>

#include "diophant/arith.hpp"

namespace diophant {

struct ChainDecomposition {
  std::size_t s = 0;
  std::vector<Integer> a;
  std::vector<Integer> d_chain;  // positive
  std::vector<Integer> a_bar;    // signed like a
  std::vector<Integer> d_bar;    // d_bar[0] may be negative, the rest positive
  Integer n;
  Integer n1;  // n == d_chain.back() * n1

  const Integer& d() const { return d_chain.back(); }
};

/// gcd of all coefficients divides n. Zero entries are allowed here; an
/// all-zero vector is solvable only for n == 0.
bool solvable(std::span<const Integer> coeffs, const Integer& n);

/// Throws kZeroCoefficient, kNotSolvable, or kInvalidArgument when s < 2.
ChainDecomposition build_chain(std::span<const Integer> coeffs,
                               const Integer& n);

}  // namespace diophant
