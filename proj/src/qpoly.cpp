#include "qshuffle/qpoly.hpp"

#include <stdexcept>
#include <utility>

namespace qshuffle {

QPoly::QPoly(BigInt constant) {
  if (constant < 0) {
    throw std::invalid_argument("QPoly coefficients must be non-negative");
  }
  if (constant != 0) {
    coefficients_.push_back(std::move(constant));
  }
}

QPoly QPoly::monomial(int exponent, BigInt coefficient) {
  if (exponent < 0) {
    throw std::invalid_argument("QPoly exponents must be non-negative");
  }
  if (coefficient < 0) {
    throw std::invalid_argument("QPoly coefficients must be non-negative");
  }
  QPoly p;
  if (coefficient != 0) {
    p.coefficients_.assign(static_cast<std::size_t>(exponent) + 1, BigInt(0));
    p.coefficients_.back() = std::move(coefficient);
  }
  return p;
}

QPoly QPoly::from_coefficients(std::vector<BigInt> coefficients) {
  for (const auto& c : coefficients) {
    if (c < 0) {
      throw std::invalid_argument("QPoly coefficients must be non-negative");
    }
  }
  QPoly p;
  p.coefficients_ = std::move(coefficients);
  p.trim();
  return p;
}

BigInt QPoly::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return BigInt(0);
  return coefficients_[static_cast<std::size_t>(exponent)];
}

void QPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), BigInt(0));
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return QPoly{};
  QPoly out;
  out.coefficients_.assign(
      lhs.coefficients_.size() + rhs.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    if (lhs.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out.coefficients_[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return out;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly QPoly::shifted(int exponent) const {
  if (is_zero()) return QPoly{};
  if (exponent < 0) {
    throw std::invalid_argument("QPoly shift exponent must be non-negative");
  }
  if (exponent == 0) {
    QPoly copy = *this;
    return copy;
  }
  QPoly out;
  out.coefficients_.assign(static_cast<std::size_t>(exponent), BigInt(0));
  out.coefficients_.insert(out.coefficients_.end(), coefficients_.begin(),
                           coefficients_.end());
  return out;
}

BigInt QPoly::value_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coefficients_) sum += c;
  return sum;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coefficients_.size(); ++e) {
    const BigInt& c = coefficients_[e];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += c.str();
    } else {
      if (c != 1) {
        out += c.str();
        out += '*';
      }
      out += 'q';
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

std::vector<std::string> QPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c.str());
  return out;
}

QPoly q_bracket(int k) {
  if (k <= 0) return QPoly{};
  return QPoly::from_coefficients(
      std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

QPoly q_factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("q_factorial requires n >= 0");
  }
  QPoly out = QPoly::one();
  for (int k = 2; k <= n; ++k) {
    out *= q_bracket(k);
  }
  return out;
}

QPoly gaussian_binomial(int n, int m) {
  if (m < 0) return QPoly{};
  if (m == 0) return QPoly::one();  // empty product, even for n < 0
  if (m > n) return QPoly{};
  if (m == n) return QPoly::one();
  // row[j] holds [i, j]_q while sweeping i upward.
  std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
  row[0] = QPoly::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] +
          row[static_cast<std::size_t>(j)].shifted(j);
    }
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace qshuffle
