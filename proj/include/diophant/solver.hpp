#pragma once

// Closed-form solution families for a_1 x_1 + ... + a_s x_s = n.
//
// Raw mode evaluates the Euler-totient formula literally, powers and all.
// Canonical mode follows the same recursion over the gcd chain but takes
// every two-variable particular as the least nonnegative residue, so no
// totient-sized power is ever materialized.

#include <cstddef>
#include <functional>
#include <span>

#include "diophant/arith.hpp"
#include "diophant/solution.hpp"

namespace diophant {

struct RawOptions {
  // Largest bit length any intermediate value may reach.
  std::size_t guard_bits = std::size_t{1} << 20;
  FactorOptions factor;
};

/// x = c0 a0^(phi(|b0|)-1) + b0 t,  y = (c0/b0)(1 - a0^phi(|b0|)) - a0 t
GeneralSolution solve_two_form_a(const Integer& a, const Integer& b,
                                 const Integer& c,
                                 const RawOptions& options = {});

/// x = (c0/a0)(1 - b0^phi(|a0|)) - b0 t,  y = c0 b0^(phi(|a0|)-1) + a0 t
GeneralSolution solve_two_form_b(const Integer& a, const Integer& b,
                                 const Integer& c,
                                 const RawOptions& options = {});

/// Literal evaluation of the s-variable totient formula. Requires s >= 2 and
/// nonzero coefficients. Throws kRawFormTooLarge past options.guard_bits.
GeneralSolution solve_raw(const Equation& eq, const RawOptions& options = {});

/// Same family as solve_raw with entries kept polynomially small.
GeneralSolution solve_canonical(const Equation& eq,
                                const FactorOptions& options = {});

/// particular + sum_m t[m] * basis[m]
IntVector evaluate(const GeneralSolution& sol, std::span<const Integer> t);

bool verify(const Equation& eq, std::span<const Integer> x);

/// Recovers t with evaluate(sol, t) == x by back-substitution over the
/// basis pivots (last nonzero entry of each vector, all distinct).
/// Throws kNotInFamily when x is not a member of the family.
IntVector express_in_parameters(const GeneralSolution& sol,
                                std::span<const Integer> x);

/// basis[m][k] == 0 for k > m + 1 and basis[m][m + 1] != 0.
bool has_triangular_tail(const GeneralSolution& sol);

/// Both closed forms for 2^m x + 3^n y = 1, computed from
/// phi(2^m) = 2^m - 2^(m-1) and phi(3^n) = 3^n - 3^(n-1).
struct PowerForms {
  GeneralSolution form_a;  // x = 2^(m(phi(3^n)-1)) + 3^n t
  GeneralSolution form_b;  // y = 3^(n(phi(2^m)-1)) + 2^m t
};

PowerForms power_equation(unsigned long m, unsigned long n,
                          std::size_t guard_bits = std::size_t{1} << 20);

/// Facade. Removes zero-coefficient variables (they come back as unit basis
/// vectors), handles s == 1 directly, and dispatches the rest on mode.
/// kFormA/kFormB need exactly two nonzero coefficients; kOracle is not
/// served here (see solve_with).
GeneralSolution solve(const Equation& eq,
                      SolveMode mode = SolveMode::kCanonical,
                      const RawOptions& options = {});

using CoreSolver = std::function<GeneralSolution(const Equation&)>;

/// The facade's preprocessing around an arbitrary core solver, which only
/// ever sees s >= 2 and nonzero coefficients.
GeneralSolution solve_with(const Equation& eq, SolveMode label,
                           const CoreSolver& core);

}  // namespace diophant
