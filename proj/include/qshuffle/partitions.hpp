#ifndef QSHUFFLE_PARTITIONS_HPP
#define QSHUFFLE_PARTITIONS_HPP

#include <string>
#include <vector>

#include "qshuffle/qpoly.hpp"

namespace qshuffle {

/// Weakly decreasing sequence of positive integer parts; the empty
/// partition has weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Builds from a weakly decreasing sequence that may contain zeros;
  /// the zeros are dropped.
  static Partition from_padded(const std::vector<int>& values);

  int length() const { return static_cast<int>(parts_.size()); }
  long long weight() const;
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;

  std::string str() const;  // "(6, 4, 3)"; "()" when empty

 private:
  std::vector<int> parts_;
};

/// All partitions with at most max_len parts, each at most max_part,
/// ordered by weight, then reverse-lexicographically within a weight.
/// Their weight generating function is gaussian_binomial(max_len+max_part,
/// max_len).
std::vector<Partition> enumerate_bounded_partitions(int max_len, int max_part);

/// All partitions with exactly len parts, smallest part >= min_part and
/// largest <= max_part. min_part = 0 enumerates weakly decreasing sequences
/// of length len over [0, max_part] and drops the zeros, so the result is
/// the same set as enumerate_bounded_partitions(len, max_part). The weight
/// generating function is q^{len*min_part} *
/// gaussian_binomial(max_part+len-min_part, len). min_part > max_part with
/// len > 0 yields an empty sequence.
std::vector<Partition> enumerate_exact_partitions(int len, int min_part,
                                                  int max_part);

/// Sum of q^{|lambda|} over the given partitions.
QPoly weight_generating_function(const std::vector<Partition>& partitions);

/// Closed form for the k-descent shuffle generating function:
/// [m-r+s, k-r]_q [n-s+r, k-s]_q q^{maj_sigma+maj_pi+(k-s)(k-r)}.
QPoly stanley_rhs(int m, int n, int r, int s, int k, int maj_sigma,
                  int maj_pi);

/// Closed form for the all-shuffles generating function:
/// [n+m, m]_q q^{maj_sigma+maj_pi}.
QPoly garsia_gessel_rhs(int m, int n, int maj_sigma, int maj_pi);

}  // namespace qshuffle

#endif  // QSHUFFLE_PARTITIONS_HPP
