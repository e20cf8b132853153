#ifndef QSHUFFLE_BIJECTION_HPP
#define QSHUFFLE_BIJECTION_HPP

#include <set>
#include <vector>

#include "qshuffle/partitions.hpp"
#include "qshuffle/permutation.hpp"

namespace qshuffle {

/// Removal chain of a shuffle alpha of (sigma, pi): chain[i] is alpha with
/// pi_1..pi_i removed, so chain[0] = alpha and chain[n] = sigma.
struct ShuffleDecomposition {
  std::vector<Permutation> chain;        // size n+1
  std::vector<int> t_values;             // t(1)..t(n)
  std::vector<bool> descent_drop_flags;  // true at i iff removing pi_i
                                         // lowered the descent count
  std::vector<int> insertion_positions;  // k_1 <= ... <= k_n, 1-based

  bool operator==(const ShuffleDecomposition&) const = default;
};

/// Image of the shuffle -> partition-pair map. Both sequences are carried
/// at fixed length (lambda has k-r entries, mu has n-k+r entries), weakly
/// decreasing with zeros allowed; zero parts arise whenever k = s.
struct PartitionPair {
  std::vector<int> lambda;
  std::vector<int> mu;

  Partition lambda_partition() const { return Partition::from_padded(lambda); }
  Partition mu_partition() const { return Partition::from_padded(mu); }
  long long weight() const;

  bool operator==(const PartitionPair&) const = default;
};

/// Builds the removal chain of alpha with t-values, descent-drop flags and
/// insertion positions. Throws std::invalid_argument when alpha is not a
/// shuffle of (sigma, pi), identifying the first letter mismatch.
ShuffleDecomposition decompose(const Permutation& sigma, const Permutation& pi,
                               const Permutation& alpha);

/// The forward map: a k-descent shuffle to (lambda, mu) with
/// maj(alpha) = |lambda| + |mu| + maj(sigma) + maj(pi).
PartitionPair phi(const Permutation& sigma, const Permutation& pi,
                  const Permutation& alpha);

/// The inverse map: inserts pi_n, ..., pi_1 into sigma guided by the
/// multiset of lambda and mu values, returning the unique k-descent shuffle
/// mapping to the pair. Throws std::invalid_argument when the pair violates
/// m >= lambda_1 >= ... >= lambda_{k-r} >= k-s >= mu_1 >= ... >= 0 or has
/// the wrong lengths.
Permutation psi(const Permutation& sigma, const Permutation& pi, int k,
                const PartitionPair& pair);

/// One insertion step of the inverse map, recorded for trace output.
struct PsiStep {
  int index = 0;               // i, counting n down to 1
  int letter = 0;              // pi_i
  std::vector<int> t_row;      // T^(i), entries for spaces 0..k_{i+1}-1
  std::vector<int> multiset;   // M^(i) before the removal, non-increasing
  int position = 0;            // k_i
  Permutation before;          // alpha^(i)
};

struct PsiTrace {
  Permutation alpha;
  std::vector<PsiStep> steps;  // ordered i = n down to 1
};

PsiTrace psi_trace(const Permutation& sigma, const Permutation& pi, int k,
                   const PartitionPair& pair);

/// Value sets ST^(1) .. ST^(n) of the prefix rows T^(i) of a decomposition.
/// Verifies ST^(1) subset-of ... subset-of ST^(n) subset-of {0..m}, entry
/// distinctness, and that each t(i) is the max of ST^(i) when the descent
/// dropped at i and the min otherwise. Violations throw std::logic_error
/// (unreachable for decompositions produced by decompose()).
std::vector<std::set<int>> t_sequence_check(const ShuffleDecomposition& d);

}  // namespace qshuffle

#endif  // QSHUFFLE_BIJECTION_HPP
