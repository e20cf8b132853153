#ifndef QSHUFFLE_QPOLY_HPP
#define QSHUFFLE_QPOLY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qshuffle {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in the formal variable q with exact non-negative integer
/// coefficients, stored densely by exponent with trailing zeros trimmed.
class QPoly {
 public:
  QPoly() = default;  // zero polynomial
  explicit QPoly(BigInt constant);

  static QPoly one() { return QPoly(BigInt(1)); }
  static QPoly monomial(int exponent, BigInt coefficient = BigInt(1));
  static QPoly from_coefficients(std::vector<BigInt> coefficients);

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  BigInt coefficient(int exponent) const;
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  /// The product q^exponent * (*this).
  QPoly shifted(int exponent) const;
  BigInt value_at_one() const;

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

  bool operator==(const QPoly&) const = default;

  /// Renders ascending exponents, e.g. "1 + 2*q^2 + q^3"; "0" when zero.
  std::string str() const;
  /// Decimal coefficient strings indexed by exponent (the JSON form).
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();

  std::vector<BigInt> coefficients_;
};

/// [k]_q = 1 + q + ... + q^{k-1}; the zero polynomial for k <= 0.
QPoly q_bracket(int k);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(int n);

/// Gaussian polynomial [n m]_q, built by the Pascal recurrence
/// [n m] = [n-1 m-1] + q^m [n-1 m]. Zero when m < 0 or m > n.
QPoly gaussian_binomial(int n, int m);

}  // namespace qshuffle

#endif  // QSHUFFLE_QPOLY_HPP
