#pragma once

// Independent reference solver built only on extended Euclid, and a check
// that two affine families describe the same solution set. Nothing here
// touches the gcd chain or the totient.

#include <span>
#include <vector>

#include "diophant/arith.hpp"
#include "diophant/solution.hpp"

namespace diophant {

/// Classical back-substitution: d_{s-1} y + a_s x_s = n via Bezout
/// coefficients, then recurse on the prefix. Needs s >= 2, no zero
/// coefficients.
GeneralSolution euclid_solve(const Equation& eq);

/// Row-style Hermite normal form of the lattice spanned by the given
/// vectors: echelon rows with strictly increasing pivot columns, positive
/// pivots, and entries above each pivot reduced into [0, pivot). Zero rows
/// are dropped.
std::vector<IntVector> hermite_form(std::vector<IntVector> rows);

/// True when v is an integer combination of basis.
bool in_lattice(std::span<const IntVector> basis, std::span<const Integer> v);

/// Same particular coset and same homogeneous lattice.
bool lattice_equivalent(const GeneralSolution& lhs, const GeneralSolution& rhs,
                        const Equation& eq);

}  // namespace diophant
