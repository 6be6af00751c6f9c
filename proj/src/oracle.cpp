#include "diophant/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "diophant/error.hpp"

namespace diophant {
namespace {

// Particular solution of coeffs[0..len) . x == rhs using prefix gcds.
IntVector bezout_particular(std::span<const Integer> coeffs,
                            std::span<const Integer> prefix_gcd,
                            std::size_t len, Integer rhs) {
  IntVector x(len);
  for (std::size_t k = len; k-- > 1;) {
    const Integer& head = prefix_gcd[k - 1];
    const ExtGcd e = ext_gcd(head, coeffs[k]);
    const Integer scale = rhs / e.g;
    x[k] = e.v * scale;
    rhs = head * (e.u * scale);
  }
  x[0] = rhs / coeffs[0];
  return x;
}

// Coordinates against a basis whose last-nonzero positions are distinct.
std::optional<bool> echelon_membership(std::span<const IntVector> basis,
                                       std::span<const Integer> v) {
  const std::size_t s = v.size();
  std::vector<std::optional<std::size_t>> owner(s);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const IntVector& b = basis[m];
    auto last = std::find_if(b.rbegin(), b.rend(), [](const Integer& x) { return x != 0; });
    if (last == b.rend()) return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(b.rend() - last) - 1;
    if (owner[k]) return std::nullopt;
    owner[k] = m;
  }
  IntVector r(v.begin(), v.end());
  for (std::size_t k = s; k-- > 0;) {
    if (r[k] == 0) continue;
    if (!owner[k]) return false;
    const IntVector& b = basis[*owner[k]];
    if (!mpz_divisible_p(r[k].get_mpz_t(), b[k].get_mpz_t())) return false;
    const Integer q = r[k] / b[k];
    for (std::size_t i = 0; i <= k; ++i) r[i] -= q * b[i];
  }
  return true;
}

void check_length(const IntVector& v, std::size_t s) {
  if (v.size() != s) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " for an equation in " + std::to_string(s) + " variables");
  }
}

}  // namespace

GeneralSolution euclid_solve(const Equation& eq) {
  const std::size_t s = eq.size();
  if (s < 2) throw Error(ErrorCode::kInvalidArgument, "euclid_solve needs at least two coefficients");
  for (std::size_t i = 0; i < s; ++i) {
    if (eq.coeffs[i] == 0) {
      throw Error(ErrorCode::kZeroCoefficient,
                  "coefficient " + std::to_string(i + 1) + " is zero");
    }
  }

  IntVector prefix_gcd(s);
  prefix_gcd[0] = abs(eq.coeffs[0]);
  for (std::size_t i = 1; i < s; ++i) prefix_gcd[i] = ext_gcd(prefix_gcd[i - 1], eq.coeffs[i]).g;
  if (!mpz_divisible_p(eq.rhs.get_mpz_t(), prefix_gcd.back().get_mpz_t())) {
    throw Error(ErrorCode::kNotSolvable,
                "gcd " + prefix_gcd.back().get_str() + " does not divide " + eq.rhs.get_str());
  }

  GeneralSolution sol;
  sol.mode = SolveMode::kOracle;
  sol.particular = bezout_particular(eq.coeffs, prefix_gcd, s, eq.rhs);
  for (std::size_t k = 1; k < s; ++k) {
    // Kernel of g_{k-1} y + a_k x_k == 0 is (a_k, -g_{k-1}) / g_k; the
    // y-step is realized on the prefix with right-hand side g_{k-1} a_k / g_k.
    const Integer& head = prefix_gcd[k - 1];
    const Integer& g = prefix_gcd[k];
    IntVector b = bezout_particular(eq.coeffs, prefix_gcd, k, head * (eq.coeffs[k] / g));
    b.resize(s, 0);
    b[k] = -(head / g);
    sol.basis.push_back(std::move(b));
  }
  return sol;
}

std::vector<IntVector> hermite_form(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  Integer q;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid on column c over rows [pivot_row, end) until one nonzero is left.
    for (;;) {
      std::optional<std::size_t> smallest;
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (!smallest || abs(rows[r][c]) < abs(rows[*smallest][c])) smallest = r;
      }
      if (!smallest) break;
      std::swap(rows[pivot_row], rows[*smallest]);
      bool reduced_all = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    const Integer& p = rows[pivot_row][c];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

bool in_lattice(std::span<const IntVector> basis, std::span<const Integer> v) {
  if (auto fast = echelon_membership(basis, v)) return *fast;

  const std::vector<IntVector> h = hermite_form({basis.begin(), basis.end()});
  IntVector r(v.begin(), v.end());
  std::size_t col = 0;
  for (const IntVector& row : h) {
    while (row[col] == 0) ++col;
    for (std::size_t k = 0; k < col; ++k) {
      if (r[k] != 0) return false;
    }
    if (!mpz_divisible_p(r[col].get_mpz_t(), row[col].get_mpz_t())) return false;
    const Integer q = r[col] / row[col];
    for (std::size_t k = col; k < r.size(); ++k) r[k] -= q * row[k];
  }
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

bool lattice_equivalent(const GeneralSolution& lhs, const GeneralSolution& rhs,
                        const Equation& eq) {
  const std::size_t s = eq.size();
  check_length(lhs.particular, s);
  check_length(rhs.particular, s);
  for (const auto& b : lhs.basis) check_length(b, s);
  for (const auto& b : rhs.basis) check_length(b, s);

  IntVector diff(s);
  for (std::size_t k = 0; k < s; ++k) diff[k] = lhs.particular[k] - rhs.particular[k];
  if (!in_lattice(rhs.basis, diff)) return false;
  for (auto& x : diff) x = -x;
  if (!in_lattice(lhs.basis, diff)) return false;

  for (const auto& b : lhs.basis) {
    if (!in_lattice(rhs.basis, b)) return false;
  }
  for (const auto& b : rhs.basis) {
    if (!in_lattice(lhs.basis, b)) return false;
  }
  return true;
}

}  // namespace diophant
