#include "diophant/chain.hpp"

#include <string>

#include "diophant/error.hpp"

namespace diophant {

bool solvable(std::span<const Integer> coeffs, const Integer& n) {
  Integer g = 0;
  for (const auto& c : coeffs) g = gcd(g, c);
  if (g == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t()) != 0;
}

ChainDecomposition build_chain(std::span<const Integer> coeffs,
                               const Integer& n) {
  const std::size_t s = coeffs.size();
  if (s < 2) {
    throw Error(ErrorCode::kInvalidArgument, "build_chain needs at least two coefficients");
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (coeffs[i] == 0) {
      throw Error(ErrorCode::kZeroCoefficient,
                  "coefficient " + std::to_string(i + 1) + " is zero");
    }
  }

  ChainDecomposition c;
  c.s = s;
  c.a.assign(coeffs.begin(), coeffs.end());
  c.n = n;

  c.d_chain.reserve(s - 1);
  c.d_chain.push_back(gcd(coeffs[0], coeffs[1]));
  for (std::size_t i = 2; i < s; ++i) {
    c.d_chain.push_back(gcd(c.d_chain.back(), coeffs[i]));
  }

  const Integer& d = c.d_chain.back();
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
    throw Error(ErrorCode::kNotSolvable,
                "gcd " + d.get_str() + " does not divide " + n.get_str());
  }
  c.n1 = n / d;

  c.a_bar.reserve(s);
  c.a_bar.push_back(coeffs[0] / c.d_chain[0]);
  for (std::size_t i = 1; i < s; ++i) {
    c.a_bar.push_back(coeffs[i] / c.d_chain[i - 1]);
  }

  c.d_bar.reserve(s - 1);
  c.d_bar.push_back(c.a_bar[0]);
  for (std::size_t j = 1; j + 1 < s; ++j) {
    c.d_bar.push_back(c.d_chain[j - 1] / c.d_chain[j]);
  }
  return c;
}

}  // namespace diophant
