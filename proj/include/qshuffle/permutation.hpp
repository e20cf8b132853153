#ifndef QSHUFFLE_PERMUTATION_HPP
#define QSHUFFLE_PERMUTATION_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/qpoly.hpp"

namespace qshuffle {

class Permutation;

namespace detail {
Permutation make_permutation_unchecked(std::vector<int> letters);

/// Number of descents of the word.
inline int des_of(std::span<const int> letters) {
  int count = 0;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1] > letters[i]) ++count;
  }
  return count;
}

/// Sum of the 1-based descent positions of the word.
inline int maj_of(std::span<const int> letters) {
  int sum = 0;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1] > letters[i]) sum += static_cast<int>(i);
  }
  return sum;
}

struct WordStats {
  int des = 0;
  int maj = 0;
};

/// des and maj in one scan.
inline WordStats word_stats(std::span<const int> letters) {
  WordStats stats;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    const int step = letters[i - 1] > letters[i] ? 1 : 0;
    stats.des += step;
    stats.maj += static_cast<int>(i) * step;
  }
  return stats;
}

/// tails[k] = |{ p in Des : p >= k }| for k in 0..len+1 (tails[0] = des).
/// tails_out must have room for len+2 entries.
inline void tail_descent_table(std::span<const int> letters,
                               std::span<int> tails_out) {
  const int n = static_cast<int>(letters.size());
  tails_out[static_cast<std::size_t>(n) + 1] = 0;
  tails_out[static_cast<std::size_t>(n)] = 0;
  int acc = 0;
  for (int k = n - 1; k >= 1; --k) {
    acc += letters[static_cast<std::size_t>(k - 1)] >
                   letters[static_cast<std::size_t>(k)]
               ? 1
               : 0;
    tails_out[static_cast<std::size_t>(k)] = acc;
  }
  tails_out[0] = acc;
}

inline void tail_descent_table(std::span<const int> letters,
                               std::vector<int>& tails) {
  tails.resize(letters.size() + 2);
  tail_descent_table(letters, std::span<int>(tails));
}

/// Tail table, des and maj in a single backward pass
/// (maj = sum over k >= 1 of tails[k]).
inline WordStats tail_table_and_stats(std::span<const int> letters,
                                      std::span<int> tails_out) {
  const int n = static_cast<int>(letters.size());
  tails_out[static_cast<std::size_t>(n) + 1] = 0;
  tails_out[static_cast<std::size_t>(n)] = 0;
  int acc = 0;
  WordStats stats;
  for (int k = n - 1; k >= 1; --k) {
    acc += letters[static_cast<std::size_t>(k - 1)] >
                   letters[static_cast<std::size_t>(k)]
               ? 1
               : 0;
    tails_out[static_cast<std::size_t>(k)] = acc;
    stats.maj += acc;
  }
  tails_out[0] = acc;
  stats.des = acc;
  return stats;
}

/// maj(word with r inserted at `space`) - maj(word), computed from the
/// descent tail table of the word; O(1) per space.
inline int insert_maj_delta(std::span<const int> letters,
                            std::span<const int> tails, int space, int r) {
  const int n = static_cast<int>(letters.size());
  int delta = tails[static_cast<std::size_t>(space) + 1];
  if (space >= 1 && space <= n - 1 &&
      letters[static_cast<std::size_t>(space - 1)] >
          letters[static_cast<std::size_t>(space)]) {
    delta -= space;  // the descent at `space` is split by the insertion
  }
  if (space >= 1 && letters[static_cast<std::size_t>(space - 1)] > r) {
    delta += space;
  }
  if (space <= n - 1 && r > letters[static_cast<std::size_t>(space)]) {
    delta += space + 1;
  }
  return delta;
}
}  // namespace detail

/// A finite sequence of pairwise distinct non-negative integer letters.
/// Positions and descents are 1-based throughout.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> letters);

  /// Parses whitespace- or comma-separated decimal letters, e.g.
  /// "9 3 8 10 12 4 7" or "9,3,8". An all-blank string is the empty
  /// permutation.
  static Permutation parse(std::string_view text);

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  /// Letter at 1-based position pos.
  int letter_at(int pos) const;
  bool contains(int letter) const;

  bool operator==(const Permutation&) const = default;

  std::string str() const;  // space-separated letters; "" when empty

 private:
  friend Permutation detail::make_permutation_unchecked(std::vector<int>);
  struct unchecked_tag {};
  Permutation(unchecked_tag, std::vector<int> letters)
      : letters_(std::move(letters)) {}

  std::vector<int> letters_;
};

struct DescentProfile {
  std::vector<int> descent_set;  // ascending 1-based positions
  int des = 0;
  int maj = 0;

  bool operator==(const DescentProfile&) const = default;
};

DescentProfile descent_profile(const Permutation& p);

/// |{ j in Des(p) : j >= k }| for 1 <= k <= length(p).
int tail_descent_count(const Permutation& p, int k);

bool are_disjoint(const Permutation& p, const Permutation& q);

/// Streams every shuffle of two disjoint permutations, iterating the
/// position sets of pi's letters in lexicographic order. The span passed
/// to fn is only valid during the call.
template <typename F>
void for_each_shuffle(const Permutation& sigma, const Permutation& pi, F&& fn);

/// All binomial(m+n, n) shuffles in the deterministic streaming order.
std::vector<Permutation> enumerate_shuffles(const Permutation& sigma,
                                            const Permutation& pi);

/// S_{k,q}(sigma, pi) = sum of q^{maj(alpha)} over shuffles with des = k.
QPoly shuffle_generating_function(const Permutation& sigma,
                                  const Permutation& pi, int k);

/// All S_{k,q} at once, indexed by k; size max(m+n, 1).
std::vector<QPoly> shuffle_gf_by_descents(const Permutation& sigma,
                                          const Permutation& pi);

namespace detail {
void require_disjoint(const Permutation& sigma, const Permutation& pi);
}

template <typename F>
void for_each_shuffle(const Permutation& sigma, const Permutation& pi,
                      F&& fn) {
  detail::require_disjoint(sigma, pi);
  const auto& s = sigma.letters();
  const auto& p = pi.letters();
  const int n = static_cast<int>(p.size());
  const int total = n + static_cast<int>(s.size());

  std::vector<int> pos(n);  // positions of pi's letters, ascending
  for (int i = 0; i < n; ++i) pos[i] = i;
  std::vector<int> buf(total);

  for (;;) {
    int pj = 0, si = 0;
    for (int slot = 0; slot < total; ++slot) {
      if (pj < n && pos[pj] == slot) {
        buf[slot] = p[pj++];
      } else {
        buf[slot] = s[si++];
      }
    }
    fn(std::span<const int>(buf));

    // next n-combination of {0..total-1} in lexicographic order
    int i = n - 1;
    while (i >= 0 && pos[i] == total - n + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < n; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace qshuffle

#endif  // QSHUFFLE_PERMUTATION_HPP
