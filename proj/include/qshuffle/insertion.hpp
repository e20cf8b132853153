#ifndef QSHUFFLE_INSERTION_HPP
#define QSHUFFLE_INSERTION_HPP

#include <set>
#include <vector>

#include "qshuffle/permutation.hpp"

namespace qshuffle {

/// Classification of an insertion space. Inserting at an RL-space keeps the
/// descent count; inserting at an LR-space raises it by one.
enum class SpaceKind { RL, LR };

/// Canonical labeling of the n+1 insertion spaces of a permutation relative
/// to a new letter: RL-spaces are labeled 0..rl_count-1 right to left, then
/// LR-spaces rl_count..n left to right.
struct CanonicalLabeling {
  std::vector<SpaceKind> kinds;  // indexed by space 0..n
  std::vector<int> labels;       // a permutation of {0..n}
  int rl_count = 0;              // always des(sigma) + 1

  bool operator==(const CanonicalLabeling&) const = default;
};

/// Major increment sequence: increments[i] = maj after inserting the letter
/// at space i, minus maj of the base permutation.
struct MISSequence {
  std::vector<int> increments;

  bool operator==(const MISSequence&) const = default;
};

/// Inserts letter before sigma_{space+1}; space = n appends at the end.
Permutation insert_at(const Permutation& sigma, int space, int letter);

SpaceKind classify_space(const Permutation& sigma, int space, int letter);

CanonicalLabeling canonical_labeling(const Permutation& sigma, int letter);

/// maj(insert_at(sigma, space, letter)) - maj(sigma), by direct insertion
/// and rescan. Equals the canonical label of the space; that equality is
/// verified in tests and in the harness, not shared here.
int major_increment(const Permutation& sigma, int space, int letter);

MISSequence mis(const Permutation& sigma, int letter);

/// Set of the first prefix_len major increments (0 <= prefix_len <= n+1).
/// The increments are pairwise distinct; distinctness is asserted.
std::set<int> mis_prefix_set(const Permutation& sigma, int prefix_len,
                             int letter);

}  // namespace qshuffle

#endif  // QSHUFFLE_INSERTION_HPP
