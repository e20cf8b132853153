// Test-only independent oracles: signed polynomial arithmetic for the
// product/quotient Gaussian definition, and small random-instance helpers.
// Nothing here touches the library's computation paths.
#ifndef QSHUFFLE_TESTS_ORACLES_HPP
#define QSHUFFLE_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "qshuffle/permutation.hpp"
#include "qshuffle/qpoly.hpp"

namespace oracles {

// Dense signed polynomial over long long, ascending exponents.
using SignedPoly = std::vector<long long>;

inline void strip(SignedPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline SignedPoly mul(const SignedPoly& a, const SignedPoly& b) {
  if (a.empty() || b.empty()) return {};
  SignedPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  strip(out);
  return out;
}

// 1 - q^k
inline SignedPoly one_minus_q_to(int k) {
  SignedPoly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(k)] = -1;
  return p;
}

// Exact division; nullopt when the division leaves a remainder.
inline std::optional<SignedPoly> divide_exact(SignedPoly num,
                                              const SignedPoly& den) {
  strip(num);
  if (den.empty() || den.back() == 0) return std::nullopt;
  if (num.empty()) return SignedPoly{};
  if (num.size() < den.size()) return std::nullopt;
  SignedPoly quotient(num.size() - den.size() + 1, 0);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const long long lead = num[i + den.size() - 1];
    if (lead % den.back() != 0) return std::nullopt;
    const long long c = lead / den.back();
    quotient[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) {
      num[i + j] -= c * den[j];
    }
  }
  for (long long c : num) {
    if (c != 0) return std::nullopt;
  }
  return quotient;
}

// The product/quotient definition of the Gaussian polynomial:
// (1-q^n)(1-q^{n-1})...(1-q^{n-m+1}) / ((1-q^m)...(1-q)).
// nullopt when the quotient is not a polynomial (never happens for
// 0 <= m <= n).
inline std::optional<SignedPoly> gaussian_by_division(int n, int m) {
  SignedPoly num = {1};
  SignedPoly den = {1};
  for (int j = 0; j < m; ++j) {
    num = mul(num, one_minus_q_to(n - j));
    den = mul(den, one_minus_q_to(j + 1));
  }
  return divide_exact(std::move(num), den);
}

inline bool equals_qpoly(const SignedPoly& s, const qshuffle::QPoly& p) {
  if (static_cast<int>(s.size()) - 1 != p.degree()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || p.coefficient(static_cast<int>(i)) != s[i]) return false;
  }
  return true;
}

// Random permutation with distinct letters drawn from 1..pool_max.
inline qshuffle::Permutation random_permutation(std::mt19937_64& rng, int len,
                                                int pool_max) {
  std::vector<int> pool(static_cast<std::size_t>(pool_max));
  for (int i = 0; i < pool_max; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(len));
  return qshuffle::Permutation(std::move(pool));
}

// Random disjoint pair with |sigma| = m, |pi| = n, letters from 1..pool_max.
inline std::pair<qshuffle::Permutation, qshuffle::Permutation>
random_disjoint_pair(std::mt19937_64& rng, int m, int n, int pool_max) {
  std::vector<int> pool(static_cast<std::size_t>(pool_max));
  for (int i = 0; i < pool_max; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  return {qshuffle::Permutation(
              std::vector<int>(pool.begin(), pool.begin() + m)),
          qshuffle::Permutation(
              std::vector<int>(pool.begin() + m, pool.begin() + m + n))};
}

}  // namespace oracles

#endif  // QSHUFFLE_TESTS_ORACLES_HPP
