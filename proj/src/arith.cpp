#include "diophant/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "diophant/error.hpp"

namespace diophant {
namespace {

constexpr std::uint32_t kSieveBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveBound; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test of odd n > 2 to one base.
bool strong_probable_prime(const Integer& n, const Integer& n_minus_1,
                           const Integer& odd_part, unsigned long twos,
                           unsigned long base) {
  Integer a = base;
  a %= n;
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

class RhoBudget {
 public:
  explicit RhoBudget(std::uint64_t limit) : remaining_(limit) {}

  void spend(std::uint64_t steps, const Integer& n) {
    if (steps > remaining_) {
      throw Error(ErrorCode::kFactorizationLimitExceeded,
                  "rho iteration budget exhausted while factoring " +
                      n.get_str());
    }
    remaining_ -= steps;
  }

 private:
  std::uint64_t remaining_;
};

// Pollard-Brent: returns a nontrivial factor of the odd composite n.
Integer find_factor(const Integer& n, RhoBudget& budget) {
  constexpr unsigned kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      budget.spend(r, n);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long run = std::min<unsigned long>(kBatch, r - k);
        for (unsigned long i = 0; i < run; ++i) {
          y = step(y);
          q = q * abs(x - y) % n;
        }
        budget.spend(run, n);
        g = gcd(q, n);
        k += run;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batch overshot; replay single steps from the saved point.
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_cofactor(const Integer& n, RhoBudget& budget,
                     std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer f = find_factor(n, budget);
  factor_cofactor(f, budget, out);
  factor_cofactor(Integer(n / f), budget, out);
}

}  // namespace

std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  // Invariants: r0 == a*s0 + b*t0 and r1 == a*s1 + b*t1.
  Integer r0 = a, r1 = b;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  Integer q, tmp;
  while (r1 != 0) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0; s0 = -s0; t0 = -t0;
  }
  return {r0, s0, t0};
}

Integer mod_pow(const Integer& base, const Integer& exp,
                const Integer& modulus) {
  if (exp < 0) throw Error(ErrorCode::kInvalidArgument, "mod_pow: negative exponent");
  if (modulus < 1) throw Error(ErrorCode::kInvalidArgument, "mod_pow: modulus must be >= 1");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // Below this bound the 13 bases above make Miller-Rabin exact.
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) {
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
  }
  const Integer n_minus_1 = n - 1;
  Integer odd_part = n_minus_1;
  const unsigned long twos = mpz_scan1(odd_part.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd_part.get_mpz_t(), odd_part.get_mpz_t(), twos);
  for (unsigned long base : kBases) {
    if (!strong_probable_prime(n, n_minus_1, odd_part, twos, base)) return false;
  }
  return true;
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Factorization factorize(const Integer& n, const FactorOptions& options) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "factorize: argument must be >= 2");
  }
  if (bit_length(n) > options.max_bits) {
    throw Error(ErrorCode::kFactorizationLimitExceeded,
                "factorize: " + std::to_string(bit_length(n)) +
                    "-bit input exceeds the " +
                    std::to_string(options.max_bits) + "-bit budget");
  }

  std::map<Integer, unsigned long> found;
  Integer m = n;
  auto strip = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[Integer(p)] = e;
  };
  auto done = [&](unsigned long p) { return Integer(p) * p > m; };

  bool finished = false;
  for (std::uint32_t p : small_primes()) {
    if (p > options.trial_bound) break;
    if (done(p)) { finished = true; break; }
    strip(p);
  }
  if (!finished && options.trial_bound > kSieveBound) {
    // Composite candidates never divide: their prime factors are gone.
    for (unsigned long d = kSieveBound + 1; d <= options.trial_bound; d += 2) {
      if (done(d)) { finished = true; break; }
      strip(d);
    }
  }

  if (m > 1) {
    const unsigned long bound = std::max<std::uint32_t>(options.trial_bound, 1);
    if (finished || m < Integer(bound) * bound) {
      ++found[m];
    } else {
      RhoBudget budget(options.rho_iterations);
      factor_cofactor(m, budget, found);
    }
  }

  Factorization out;
  out.factors.reserve(found.size());
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

Integer totient(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "totient: argument must be nonzero");
  const Integer m = abs(n);
  if (m == 1) return 1;
  Integer phi = 1;
  for (const auto& [p, e] : factorize(m, options).factors) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pk * (p - 1);
  }
  return phi;
}

}  // namespace diophant
