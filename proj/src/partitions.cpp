#include "qshuffle/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qshuffle {

namespace {

bool partition_order(const Partition& a, const Partition& b) {
  const long long wa = a.weight();
  const long long wb = b.weight();
  if (wa != wb) return wa < wb;
  // within a weight: largest-first lexicographic, so (2) precedes (1,1)
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

void collect_weakly_decreasing(int len, int lo, int hi,
                               std::vector<int>& prefix,
                               std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(Partition::from_padded(prefix));
    return;
  }
  const int cap = prefix.empty() ? hi : std::min(hi, prefix.back());
  for (int part = cap; part >= lo; --part) {
    prefix.push_back(part);
    collect_weakly_decreasing(len, lo, hi, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::from_padded(const std::vector<int>& values) {
  std::vector<int> parts;
  parts.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw std::invalid_argument("partition parts must be non-negative");
    }
    if (i > 0 && values[i - 1] < values[i]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (values[i] > 0) parts.push_back(values[i]);
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

long long Partition::weight() const {
  long long sum = 0;
  for (int part : parts_) sum += part;
  return sum;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::vector<Partition> enumerate_bounded_partitions(int max_len,
                                                    int max_part) {
  if (max_len < 0 || max_part < 0) {
    throw std::invalid_argument("partition bounds must be non-negative");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  // length <= max_len with positive parts == length exactly max_len with
  // zeros allowed
  collect_weakly_decreasing(max_len, 0, max_part, prefix, out);
  std::sort(out.begin(), out.end(), partition_order);
  return out;
}

std::vector<Partition> enumerate_exact_partitions(int len, int min_part,
                                                  int max_part) {
  if (len < 0 || min_part < 0 || max_part < 0) {
    throw std::invalid_argument("partition bounds must be non-negative");
  }
  std::vector<Partition> out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  if (min_part > max_part) return out;  // inconsistent bounds: empty
  std::vector<int> prefix;
  collect_weakly_decreasing(len, min_part, max_part, prefix, out);
  std::sort(out.begin(), out.end(), partition_order);
  return out;
}

QPoly weight_generating_function(const std::vector<Partition>& partitions) {
  QPoly out;
  for (const auto& p : partitions) {
    out += QPoly::monomial(static_cast<int>(p.weight()));
  }
  return out;
}

QPoly stanley_rhs(int m, int n, int r, int s, int k, int maj_sigma,
                  int maj_pi) {
  if (m < 0 || n < 0 || r < 0 || s < 0 || maj_sigma < 0 || maj_pi < 0) {
    throw std::invalid_argument("stanley_rhs arguments must be non-negative");
  }
  const QPoly left = gaussian_binomial(m - r + s, k - r);
  const QPoly right = gaussian_binomial(n - s + r, k - s);
  if (left.is_zero() || right.is_zero()) return QPoly{};
  // both factors nonzero forces k >= r and k >= s, so the exponent is >= 0
  return (left * right)
      .shifted(maj_sigma + maj_pi + (k - s) * (k - r));
}

QPoly garsia_gessel_rhs(int m, int n, int maj_sigma, int maj_pi) {
  if (m < 0 || n < 0 || maj_sigma < 0 || maj_pi < 0) {
    throw std::invalid_argument(
        "garsia_gessel_rhs arguments must be non-negative");
  }
  return gaussian_binomial(n + m, m).shifted(maj_sigma + maj_pi);
}

}  // namespace qshuffle
