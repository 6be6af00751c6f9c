#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "diophant/arith.hpp"

namespace diophant {

using IntVector = std::vector<Integer>;

/// coeffs[0]*x[0] + ... + coeffs[s-1]*x[s-1] == rhs
struct Equation {
  IntVector coeffs;
  Integer rhs;

  std::size_t size() const { return coeffs.size(); }
  friend bool operator==(const Equation&, const Equation&) = default;
};

enum class SolveMode { kRaw, kCanonical, kFormA, kFormB, kOracle };

std::string_view to_string(SolveMode mode) noexcept;

/// The affine family particular + sum_m t[m] * basis[m]. Parameter t[m]
/// here is t_{m+1} in the 1-based notation.
struct GeneralSolution {
  IntVector particular;
  std::vector<IntVector> basis;
  SolveMode mode = SolveMode::kCanonical;

  friend bool operator==(const GeneralSolution&, const GeneralSolution&) = default;
};

/// Exact dot product; throws kDimensionMismatch on length mismatch.
Integer dot(std::span<const Integer> lhs, std::span<const Integer> rhs);

}  // namespace diophant
