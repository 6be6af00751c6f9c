// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every check is exact; each criterion also carries a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../support.hpp"
#include "diophant/chain.hpp"
#include "diophant/error.hpp"
#include "diophant/oracle.hpp"
#include "diophant/solver.hpp"

using namespace diophant;
using namespace diophant::testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Verdict()> body;
};

std::string show(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

bool pivots_match_chain(const Equation& eq, const GeneralSolution& sol) {
  if (!has_triangular_tail(sol)) return false;
  const ChainDecomposition c = build_chain(eq.coeffs, eq.rhs);
  for (std::size_t m = 0; m < sol.basis.size(); ++m) {
    if (sol.basis[m][m + 1] != -c.d_bar[m]) return false;
  }
  return true;
}

Verdict power_reproduction() {
  Verdict v;
  for (unsigned long m = 1; m <= 6; ++m) {
    for (unsigned long n = 1; n <= 6; ++n) {
      const PowerForms forms = power_equation(m, n);
      Equation eq;
      eq.coeffs = {Integer(1) << m, 0};
      mpz_ui_pow_ui(eq.coeffs[1].get_mpz_t(), 3, n);
      eq.rhs = 1;
      const std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      if (!sound(eq, forms.form_a)) v.fail("form A unsound at " + where);
      if (!sound(eq, forms.form_b)) v.fail("form B unsound at " + where);
      const GeneralSolution raw = solve_raw(eq);
      if (raw.particular != forms.form_a.particular || raw.basis != forms.form_a.basis) {
        v.fail("raw differs from form A at " + where);
      }
    }
  }
  return v;
}

Verdict euler_lemma() {
  Verdict v;
  std::mt19937_64 rng(2024);
  int pairs = 0;
  while (pairs < 1000) {
    const long a = static_cast<long>(uniform(rng, -1'000'000, 1'000'000));
    const long b = static_cast<long>(uniform(rng, -1'000'000, 1'000'000));
    if (std::labs(b) < 2 || euclid_gcd(a, b) != 1) continue;
    ++pairs;
    if (mod_pow(a, totient(b), abs(Integer(b))) != 1) {
      v.fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  }
  return v;
}

Verdict soundness() {
  Verdict v;
  std::mt19937_64 rng(7001);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t s = static_cast<std::size_t>(uniform(rng, 2, 8));
    const Equation eq = random_solvable(rng, s, 10'000, 1'000'000);
    const GeneralSolution sol = solve_canonical(eq);
    if (!verify(eq, sol.particular)) v.fail("particular fails for instance " + std::to_string(i));
    for (const auto& b : sol.basis) {
      if (dot(eq.coeffs, b) != 0) v.fail("basis vector not homogeneous, instance " + std::to_string(i));
    }
    if (!pivots_match_chain(eq, sol)) v.fail("triangular tail broken, instance " + std::to_string(i));
    for (int r = 0; r < 10; ++r) {
      IntVector t;
      for (std::size_t m = 0; m + 1 < s; ++m) t.emplace_back(static_cast<long>(uniform(rng, -1000, 1000)));
      try {
        if (express_in_parameters(sol, evaluate(sol, t)) != t) {
          v.fail("round trip mismatch, instance " + std::to_string(i));
        }
      } catch (const Error& e) {
        v.fail(std::string("round trip threw ") + e.what());
      }
    }
  }
  return v;
}

Verdict completeness() {
  Verdict v;
  std::mt19937_64 rng(8009);
  long total = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t s = i % 2 ? 3 : 2;
    const Equation eq = random_solvable(rng, s, 10, 50);
    const GeneralSolution sol = solve_canonical(eq);
    std::vector<long> a;
    for (const auto& c : eq.coeffs) a.push_back(c.get_si());
    const long n = eq.rhs.get_si();

    // Every x in the box with a.x == n: all leading coordinates are
    // enumerated and the last one is the unique exact quotient, if any.
    auto accept = [&](const IntVector& x) {
      ++total;
      try {
        if (evaluate(sol, express_in_parameters(sol, x)) != x) v.fail("bad parameters for " + show(x));
      } catch (const Error&) {
        v.fail("solution " + show(x) + " rejected for instance " + std::to_string(i));
      }
    };
    for (long x1 = -50; x1 <= 50; ++x1) {
      if (s == 2) {
        const long rest = n - a[0] * x1;
        if (rest % a[1] == 0 && std::labs(rest / a[1]) <= 50) accept(ints({x1, rest / a[1]}));
        continue;
      }
      for (long x2 = -50; x2 <= 50; ++x2) {
        const long rest = n - a[0] * x1 - a[1] * x2;
        if (rest % a[2] == 0 && std::labs(rest / a[2]) <= 50) accept(ints({x1, x2, rest / a[2]}));
      }
    }
  }
  if (total == 0) v.fail("enumeration found no solutions at all");
  v.detail = v.ok ? std::to_string(total) + " enumerated solutions accepted" : v.detail;
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(9011);
  for (int i = 0; i < 500; ++i) {
    const std::size_t s = static_cast<std::size_t>(uniform(rng, 2, 8));
    const Equation eq = random_solvable(rng, s, 10'000, 1'000'000);
    if (!lattice_equivalent(solve_canonical(eq), euclid_solve(eq), eq)) {
      v.fail("canonical vs oracle, instance " + std::to_string(i));
    }
  }
  for (int i = 0; i < 500; ++i) {
    const Equation eq = random_solvable(rng, 2, 10'000, 1'000'000);
    const auto a = solve_two_form_a(eq.coeffs[0], eq.coeffs[1], eq.rhs);
    const auto b = solve_two_form_b(eq.coeffs[0], eq.coeffs[1], eq.rhs);
    if (!sound(eq, a) || !sound(eq, b) || !lattice_equivalent(a, b, eq)) {
      v.fail("form A vs form B, instance " + std::to_string(i));
    }
  }
  return v;
}

Verdict raw_canonical_agreement() {
  Verdict v;
  std::mt19937_64 rng(10007);
  RawOptions guard;
  guard.guard_bits = std::size_t{1} << 16;
  for (int i = 0; i < 200; ++i) {
    const std::size_t s = static_cast<std::size_t>(uniform(rng, 2, 8));
    const Equation eq = random_solvable(rng, s, 50, 1'000'000);
    try {
      const GeneralSolution raw = solve_raw(eq, guard);
      const GeneralSolution canonical = solve_canonical(eq);
      if (!sound(eq, raw)) v.fail("raw unsound, instance " + std::to_string(i));
      if (!pivots_match_chain(eq, raw)) v.fail("raw tail broken, instance " + std::to_string(i));
      // Canonical particular expressed in the raw family, and vice versa.
      express_in_parameters(raw, canonical.particular);
      if (!lattice_equivalent(raw, canonical, eq)) v.fail("not equivalent, instance " + std::to_string(i));
    } catch (const Error& e) {
      v.fail("instance " + std::to_string(i) + ": " + e.what());
    }
  }
  for (int i = 0; i < 200; ++i) {
    const Equation eq = random_solvable(rng, 2, 50, 1'000'000);
    const GeneralSolution raw = solve_raw(eq, guard);
    const GeneralSolution two = solve_two_form_a(eq.coeffs[0], eq.coeffs[1], eq.rhs, guard);
    if (raw.particular != two.particular || raw.basis != two.basis) {
      v.fail("s=2 raw differs from the two-variable form, instance " + std::to_string(i));
    }
  }
  return v;
}

Verdict totient_brute_force() {
  Verdict v;
  for (long n = 1; n <= 10'000; ++n) {
    if (totient(n) != brute_totient(n)) v.fail("n=" + std::to_string(n));
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 power equation closed forms, 1<=m,n<=6", 1.0, power_reproduction},
      {"2 Euler lemma on 1000 coprime pairs", 5.0, euler_lemma},
      {"3 canonical soundness, 1000 equations", 30.0, soundness},
      {"4 completeness vs exhaustive enumeration, 200 equations", 60.0, completeness},
      {"5 oracle and form A/B lattice equivalence", 60.0, oracle_equivalence},
      {"6 raw/canonical agreement under a 2^16-bit guard", 60.0, raw_canonical_agreement},
      {"7 totient vs gcd counting, n <= 10^4", 10.0, totient_brute_force},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && elapsed > c.limit_seconds) {
      v.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!v.ok) ++failures;
    std::printf("[%s] criterion %s (%.3f s / %.0f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.name, elapsed,
                c.limit_seconds, v.detail.empty() ? "" : ": ", v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
