#include "diophant/solver.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "diophant/chain.hpp"
#include "diophant/error.hpp"

namespace diophant {
namespace {

class SizeGuard {
 public:
  explicit SizeGuard(std::size_t bits) : bits_(bits) {}

  const Integer& check(const Integer& x) const {
    if (bit_length(x) > bits_) too_large(bit_length(x));
    return x;
  }

  Integer pow(const Integer& base, const Integer& exp) const {
    if (exp == 0) return 1;
    if (base == 0 || base == 1) return base;
    if (base == -1) return mpz_odd_p(exp.get_mpz_t()) ? -1 : 1;
    // |base| >= 2 so the result has at least (bits(base) - 1) * exp + 1 bits.
    const Integer lower = Integer(bit_length(base) - 1) * exp + 1;
    if (lower > Integer(bits_)) too_large_estimate(lower);
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    check(r);
    return r;
  }

 private:
  [[noreturn]] void too_large(std::size_t got) const {
    throw Error(ErrorCode::kRawFormTooLarge,
                "intermediate value of " + std::to_string(got) +
                    " bits exceeds the " + std::to_string(bits_) + "-bit guard");
  }
  [[noreturn]] void too_large_estimate(const Integer& got) const {
    throw Error(ErrorCode::kRawFormTooLarge,
                "power of at least " + got.get_str() + " bits exceeds the " +
                    std::to_string(bits_) + "-bit guard");
  }

  std::size_t bits_;
};

Integer exact_div(const Integer& num, const Integer& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("inexact division " + num.get_str() + " / " +
                           den.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void require_nonzero(const Equation& eq) {
  for (std::size_t i = 0; i < eq.size(); ++i) {
    if (eq.coeffs[i] == 0) {
      throw Error(ErrorCode::kZeroCoefficient,
                  "coefficient " + std::to_string(i + 1) + " is zero");
    }
  }
}

struct Reduced {
  Integer a0, b0, c0;
};

Reduced reduce_pair(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0 || b == 0) {
    throw Error(ErrorCode::kZeroCoefficient, "two-variable form needs nonzero a and b");
  }
  const Integer g = gcd(a, b);
  if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t())) {
    throw Error(ErrorCode::kNotSolvable,
                "gcd " + g.get_str() + " does not divide " + c.get_str());
  }
  return {Integer(a / g), Integer(b / g), Integer(c / g)};
}

// Least nonnegative x with a*x == c (mod |b|), and the matching y.
// Requires gcd(a, b) == 1.
std::pair<Integer, Integer> canonical_pair(const Integer& a, const Integer& b,
                                           const Integer& c,
                                           const FactorOptions& options) {
  const Integer modulus = abs(b);
  const Integer inverse = mod_pow(a, totient(b, options) - 1, modulus);
  Integer x;
  mpz_fdiv_r(x.get_mpz_t(), Integer(c * inverse).get_mpz_t(),
             modulus.get_mpz_t());
  Integer y = exact_div(c - a * x, b);
  return {std::move(x), std::move(y)};
}

// Canonical particular of the prefix equation a[0..len) . x == rhs.
IntVector canonical_particular(const ChainDecomposition& chain,
                               std::size_t len, Integer rhs,
                               const FactorOptions& options) {
  IntVector x(len);
  for (std::size_t k = len; k > 2; --k) {
    // d_{k-1} y + a_k x_k == rhs, reduced by d_k.
    const Integer c = exact_div(rhs, chain.d_chain[k - 2]);
    auto [y, last] = canonical_pair(chain.d_bar[k - 2], chain.a_bar[k - 1], c, options);
    x[k - 1] = std::move(last);
    rhs = chain.d_chain[k - 3] * y;
  }
  const Integer c = exact_div(rhs, chain.d_chain[0]);
  auto [x0, x1] = canonical_pair(chain.a_bar[0], chain.a_bar[1], c, options);
  x[0] = std::move(x0);
  x[1] = std::move(x1);
  return x;
}

}  // namespace

GeneralSolution solve_two_form_a(const Integer& a, const Integer& b,
                                 const Integer& c, const RawOptions& options) {
  const auto [a0, b0, c0] = reduce_pair(a, b, c);
  const SizeGuard guard(options.guard_bits);
  const Integer phi = totient(b0, options.factor);
  GeneralSolution sol;
  sol.mode = SolveMode::kFormA;
  sol.particular = {guard.check(c0 * guard.pow(a0, phi - 1)),
                    guard.check(c0 * exact_div(1 - guard.pow(a0, phi), b0))};
  sol.basis = {{b0, Integer(-a0)}};
  return sol;
}

GeneralSolution solve_two_form_b(const Integer& a, const Integer& b,
                                 const Integer& c, const RawOptions& options) {
  const auto [a0, b0, c0] = reduce_pair(a, b, c);
  const SizeGuard guard(options.guard_bits);
  const Integer phi = totient(a0, options.factor);
  GeneralSolution sol;
  sol.mode = SolveMode::kFormB;
  sol.particular = {guard.check(c0 * exact_div(1 - guard.pow(b0, phi), a0)),
                    guard.check(c0 * guard.pow(b0, phi - 1))};
  sol.basis = {{Integer(-b0), a0}};
  return sol;
}

GeneralSolution solve_raw(const Equation& eq, const RawOptions& options) {
  require_nonzero(eq);
  const ChainDecomposition chain = build_chain(eq.coeffs, eq.rhs);
  const std::size_t s = chain.s;
  const SizeGuard guard(options.guard_bits);

  // 1-based accessors so the formula below reads like its source.
  auto a_bar = [&](std::size_t i) -> const Integer& { return chain.a_bar[i - 1]; };
  auto d_bar = [&](std::size_t i) -> const Integer& { return chain.d_bar[i - 1]; };

  std::vector<Integer> phi(s + 1);  // phi[k] = phi(|abar_k|), k = 2..s
  for (std::size_t k = 2; k <= s; ++k) phi[k] = totient(a_bar(k), options.factor);

  // power[i] = dbar_i^(phi(|abar_{i+1}|) - 1), i = 1..s-1
  std::vector<Integer> power(s);
  for (std::size_t i = 1; i < s; ++i) power[i] = guard.pow(d_bar(i), phi[i + 1] - 1);

  // prod_{i=lo}^{hi} power[i]: empty (hi == lo - 1) is 1, hi <= lo - 2 is 0.
  auto product = [&](std::size_t lo, std::size_t hi) -> Integer {
    if (hi + 1 == lo) return 1;
    if (hi + 1 < lo) return 0;
    Integer p = 1;
    for (std::size_t i = lo; i <= hi; ++i) guard.check(p *= power[i]);
    return p;
  };

  // factor[k] = (1 - dbar_{k-1}^phi(|abar_k|)) / abar_k, k = 2..s; exact
  // because gcd(dbar_{k-1}, abar_k) == 1.
  std::vector<Integer> factor(s + 1);
  for (std::size_t k = 2; k <= s; ++k) {
    factor[k] = exact_div(1 - guard.check(power[k - 1] * d_bar(k - 1)), a_bar(k));
  }

  GeneralSolution sol;
  sol.mode = SolveMode::kRaw;
  sol.particular.assign(s, 0);
  sol.basis.assign(s - 1, IntVector(s, 0));
  auto coeff = [&](std::size_t k, std::size_t m) -> Integer& {
    return sol.basis[m - 1][k - 1];
  };

  sol.particular[0] = guard.check(chain.n1 * product(1, s - 1));
  for (std::size_t m = 1; m <= s - 1; ++m) {
    coeff(1, m) = guard.check(a_bar(m + 1) * product(1, m - 1));
  }

  for (std::size_t k = 2; k <= s; ++k) {
    sol.particular[k - 1] = guard.check(chain.n1 * factor[k] * product(k, s - 1));
    coeff(k, k - 1) -= d_bar(k - 1);
    for (std::size_t m = 2; m <= s - 1; ++m) {
      coeff(k, m) += guard.check(a_bar(m + 1) * factor[k] * product(k, m - 1));
    }
  }
  return sol;
}

GeneralSolution solve_canonical(const Equation& eq,
                                const FactorOptions& options) {
  require_nonzero(eq);
  const ChainDecomposition chain = build_chain(eq.coeffs, eq.rhs);
  const std::size_t s = chain.s;

  GeneralSolution sol;
  sol.mode = SolveMode::kCanonical;
  sol.particular = canonical_particular(chain, s, eq.rhs, options);

  sol.basis.assign(s - 1, IntVector(s, 0));
  sol.basis[0][0] = chain.a_bar[1];
  sol.basis[0][1] = -chain.a_bar[0];
  for (std::size_t j = 1; j + 1 < s; ++j) {
    // Raising y by abar_{j+2} in d_{j+1} y + a_{j+2} x_{j+2} moves the prefix
    // right-hand side by d_{j+1} abar_{j+2}.
    const IntVector u = canonical_particular(
        chain, j + 1, chain.d_chain[j - 1] * chain.a_bar[j + 1], options);
    std::copy(u.begin(), u.end(), sol.basis[j].begin());
    sol.basis[j][j + 1] = -chain.d_bar[j];
  }
  return sol;
}

IntVector evaluate(const GeneralSolution& sol, std::span<const Integer> t) {
  if (t.size() != sol.basis.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(sol.basis.size()) +
                    " parameters, got " + std::to_string(t.size()));
  }
  IntVector x = sol.particular;
  for (std::size_t m = 0; m < t.size(); ++m) {
    const IntVector& b = sol.basis[m];
    if (b.size() != x.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "basis vector length differs from particular");
    }
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += t[m] * b[k];
  }
  return x;
}

bool verify(const Equation& eq, std::span<const Integer> x) {
  return dot(eq.coeffs, x) == eq.rhs;
}

IntVector express_in_parameters(const GeneralSolution& sol,
                                std::span<const Integer> x) {
  const std::size_t s = sol.particular.size();
  if (x.size() != s) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(x.size()) +
                    ", family of length " + std::to_string(s));
  }

  // pivot_owner[k] = index of the basis vector whose last nonzero is k.
  std::vector<std::optional<std::size_t>> pivot_owner(s);
  for (std::size_t m = 0; m < sol.basis.size(); ++m) {
    const IntVector& b = sol.basis[m];
    if (b.size() != s) {
      throw Error(ErrorCode::kDimensionMismatch, "basis vector length differs from particular");
    }
    auto last = std::find_if(b.rbegin(), b.rend(), [](const Integer& v) { return v != 0; });
    if (last == b.rend()) {
      throw Error(ErrorCode::kInvalidArgument, "zero basis vector");
    }
    const std::size_t k = static_cast<std::size_t>(b.rend() - last) - 1;
    if (pivot_owner[k]) {
      throw Error(ErrorCode::kInvalidArgument, "basis vectors share a pivot position");
    }
    pivot_owner[k] = m;
  }

  IntVector residual(s);
  for (std::size_t k = 0; k < s; ++k) residual[k] = x[k] - sol.particular[k];

  IntVector t(sol.basis.size(), 0);
  for (std::size_t k = s; k-- > 0;) {
    if (residual[k] == 0) continue;
    if (!pivot_owner[k]) {
      throw Error(ErrorCode::kNotInFamily,
                  "component " + std::to_string(k + 1) + " is inconsistent");
    }
    const std::size_t m = *pivot_owner[k];
    const IntVector& b = sol.basis[m];
    if (!mpz_divisible_p(residual[k].get_mpz_t(), b[k].get_mpz_t())) {
      throw Error(ErrorCode::kNotInFamily,
                  "component " + std::to_string(k + 1) + " is not a multiple of the pivot");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), residual[k].get_mpz_t(), b[k].get_mpz_t());
    for (std::size_t i = 0; i <= k; ++i) residual[i] -= q * b[i];
    t[m] = std::move(q);
  }
  return t;
}

bool has_triangular_tail(const GeneralSolution& sol) {
  const std::size_t s = sol.particular.size();
  for (std::size_t m = 0; m < sol.basis.size(); ++m) {
    const IntVector& b = sol.basis[m];
    if (b.size() != s || m + 1 >= s) return false;
    if (b[m + 1] == 0) return false;
    for (std::size_t k = m + 2; k < s; ++k) {
      if (b[k] != 0) return false;
    }
  }
  return true;
}

PowerForms power_equation(unsigned long m, unsigned long n,
                          std::size_t guard_bits) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "power_equation needs m, n >= 1");
  }
  const SizeGuard guard(guard_bits);
  const Integer two_m = guard.pow(2, m);
  const Integer three_n = guard.pow(3, n);
  const Integer phi_two = two_m - two_m / 2;        // 2^m - 2^(m-1)
  const Integer phi_three = three_n - three_n / 3;  // 3^n - 3^(n-1)

  PowerForms out;
  out.form_a.mode = SolveMode::kFormA;
  out.form_a.particular = {guard.pow(2, Integer(m) * (phi_three - 1)),
                           exact_div(1 - guard.pow(2, Integer(m) * phi_three), three_n)};
  out.form_a.basis = {{three_n, Integer(-two_m)}};

  out.form_b.mode = SolveMode::kFormB;
  out.form_b.particular = {exact_div(1 - guard.pow(3, Integer(n) * phi_two), two_m),
                           guard.pow(3, Integer(n) * (phi_two - 1))};
  out.form_b.basis = {{Integer(-three_n), two_m}};
  return out;
}

GeneralSolution solve_with(const Equation& eq, SolveMode label,
                           const CoreSolver& core) {
  const std::size_t s = eq.size();
  if (s == 0) throw Error(ErrorCode::kInvalidArgument, "equation has no coefficients");
  if (!solvable(eq.coeffs, eq.rhs)) {
    throw Error(ErrorCode::kNotSolvable,
                "gcd of the coefficients does not divide " + eq.rhs.get_str());
  }

  std::vector<std::size_t> live;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < s; ++i) (eq.coeffs[i] == 0 ? free : live).push_back(i);

  GeneralSolution sol;
  sol.mode = label;
  sol.particular.assign(s, 0);

  if (live.size() == 1) {
    sol.particular[live[0]] = exact_div(eq.rhs, eq.coeffs[live[0]]);
  } else if (live.size() >= 2) {
    Equation reduced;
    reduced.rhs = eq.rhs;
    for (std::size_t i : live) reduced.coeffs.push_back(eq.coeffs[i]);
    GeneralSolution inner = core(reduced);
    sol.mode = inner.mode;
    for (std::size_t j = 0; j < live.size(); ++j) sol.particular[live[j]] = inner.particular[j];
    for (const IntVector& b : inner.basis) {
      IntVector full(s, 0);
      for (std::size_t j = 0; j < live.size(); ++j) full[live[j]] = b[j];
      sol.basis.push_back(std::move(full));
    }
  }
  for (std::size_t i : free) {
    IntVector unit(s, 0);
    unit[i] = 1;
    sol.basis.push_back(std::move(unit));
  }
  return sol;
}

GeneralSolution solve(const Equation& eq, SolveMode mode,
                      const RawOptions& options) {
  switch (mode) {
    case SolveMode::kRaw:
      return solve_with(eq, mode, [&](const Equation& e) { return solve_raw(e, options); });
    case SolveMode::kCanonical:
      return solve_with(eq, mode, [&](const Equation& e) {
        return solve_canonical(e, options.factor);
      });
    case SolveMode::kFormA:
    case SolveMode::kFormB:
      return solve_with(eq, mode, [&](const Equation& e) {
        if (e.size() != 2) {
          throw Error(ErrorCode::kInvalidArgument,
                      std::string(to_string(mode)) +
                          " needs exactly two nonzero coefficients");
        }
        return mode == SolveMode::kFormA
                   ? solve_two_form_a(e.coeffs[0], e.coeffs[1], e.rhs, options)
                   : solve_two_form_b(e.coeffs[0], e.coeffs[1], e.rhs, options);
      });
    case SolveMode::kOracle:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "oracle mode is served by euclid_solve");
}

}  // namespace diophant
