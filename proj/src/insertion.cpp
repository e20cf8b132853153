#include "qshuffle/insertion.hpp"

#include <stdexcept>
#include <string>

namespace qshuffle {

namespace {

void require_insertable(const Permutation& sigma, int space, int letter) {
  if (letter < 0) {
    throw std::invalid_argument("letters must be non-negative");
  }
  if (sigma.contains(letter)) {
    throw std::invalid_argument("letter " + std::to_string(letter) +
                                " already occurs in " + sigma.str());
  }
  if (space < 0 || space > sigma.length()) {
    throw std::invalid_argument("space " + std::to_string(space) +
                                " out of range 0.." +
                                std::to_string(sigma.length()));
  }
}

void require_new_letter(const Permutation& sigma, int letter) {
  if (letter < 0) {
    throw std::invalid_argument("letters must be non-negative");
  }
  if (sigma.contains(letter)) {
    throw std::invalid_argument("letter " + std::to_string(letter) +
                                " already occurs in " + sigma.str());
  }
}

}  // namespace

Permutation insert_at(const Permutation& sigma, int space, int letter) {
  require_insertable(sigma, space, letter);
  std::vector<int> letters = sigma.letters();
  letters.insert(letters.begin() + space, letter);
  return detail::make_permutation_unchecked(std::move(letters));
}

SpaceKind classify_space(const Permutation& sigma, int space, int letter) {
  require_insertable(sigma, space, letter);
  const auto& s = sigma.letters();
  const int n = sigma.length();
  // The lone space of the empty permutation counts as RL, keeping
  // rl_count = des + 1 true at n = 0.
  if (n == 0) return SpaceKind::RL;
  if (space == n) return s[static_cast<std::size_t>(n - 1)] < letter
                             ? SpaceKind::RL
                             : SpaceKind::LR;
  if (space == 0) return letter < s[0] ? SpaceKind::RL : SpaceKind::LR;
  const int a = s[static_cast<std::size_t>(space - 1)];
  const int b = s[static_cast<std::size_t>(space)];
  const bool rl = (a > b && b > letter) || (letter > a && a > b) ||
                  (a < letter && letter < b);
  return rl ? SpaceKind::RL : SpaceKind::LR;
}

CanonicalLabeling canonical_labeling(const Permutation& sigma, int letter) {
  require_new_letter(sigma, letter);
  const int n = sigma.length();
  CanonicalLabeling out;
  out.kinds.resize(static_cast<std::size_t>(n) + 1);
  out.labels.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    out.kinds[static_cast<std::size_t>(i)] = classify_space(sigma, i, letter);
    if (out.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL) {
      ++out.rl_count;
    }
  }
  int next_rl = 0;
  for (int i = n; i >= 0; --i) {
    if (out.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL) {
      out.labels[static_cast<std::size_t>(i)] = next_rl++;
    }
  }
  int next_lr = out.rl_count;
  for (int i = 0; i <= n; ++i) {
    if (out.kinds[static_cast<std::size_t>(i)] == SpaceKind::LR) {
      out.labels[static_cast<std::size_t>(i)] = next_lr++;
    }
  }
  return out;
}

int major_increment(const Permutation& sigma, int space, int letter) {
  const Permutation inserted = insert_at(sigma, space, letter);
  return detail::maj_of(inserted.letters()) - detail::maj_of(sigma.letters());
}

MISSequence mis(const Permutation& sigma, int letter) {
  require_new_letter(sigma, letter);
  MISSequence out;
  out.increments.reserve(static_cast<std::size_t>(sigma.length()) + 1);
  for (int i = 0; i <= sigma.length(); ++i) {
    out.increments.push_back(major_increment(sigma, i, letter));
  }
  return out;
}

std::set<int> mis_prefix_set(const Permutation& sigma, int prefix_len,
                             int letter) {
  require_new_letter(sigma, letter);
  if (prefix_len < 0 || prefix_len > sigma.length() + 1) {
    throw std::invalid_argument("prefix length " + std::to_string(prefix_len) +
                                " out of range 0.." +
                                std::to_string(sigma.length() + 1));
  }
  std::set<int> out;
  for (int i = 0; i < prefix_len; ++i) {
    if (!out.insert(major_increment(sigma, i, letter)).second) {
      throw std::logic_error("duplicate major increment in prefix of MIS(" +
                             sigma.str() + ", " + std::to_string(letter) +
                             ")");
    }
  }
  return out;
}

}  // namespace qshuffle
