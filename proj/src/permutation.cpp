#include "qshuffle/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace qshuffle {

namespace detail {

Permutation make_permutation_unchecked(std::vector<int> letters) {
  return Permutation(Permutation::unchecked_tag{}, std::move(letters));
}

void require_disjoint(const Permutation& sigma, const Permutation& pi) {
  if (!are_disjoint(sigma, pi)) {
    throw std::invalid_argument("permutations share a letter: sigma=" +
                                sigma.str() + " pi=" + pi.str());
  }
}

}  // namespace detail

Permutation::Permutation(std::vector<int> letters)
    : letters_(std::move(letters)) {
  std::unordered_set<int> seen;
  seen.reserve(letters_.size());
  for (int x : letters_) {
    if (x < 0) {
      throw std::invalid_argument("permutation letters must be non-negative");
    }
    if (!seen.insert(x).second) {
      throw std::invalid_argument("duplicate letter " + std::to_string(x) +
                                  " in permutation");
    }
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) {
      throw std::invalid_argument("cannot parse letter near '" +
                                  std::string(text.substr(i)) + "'");
    }
    letters.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(letters));
}

int Permutation::letter_at(int pos) const {
  if (pos < 1 || pos > length()) {
    throw std::invalid_argument("position " + std::to_string(pos) +
                                " out of range 1.." + std::to_string(length()));
  }
  return letters_[static_cast<std::size_t>(pos - 1)];
}

bool Permutation::contains(int letter) const {
  return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

DescentProfile descent_profile(const Permutation& p) {
  DescentProfile profile;
  const auto& letters = p.letters();
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1] > letters[i]) {
      profile.descent_set.push_back(static_cast<int>(i));
      profile.maj += static_cast<int>(i);
    }
  }
  profile.des = static_cast<int>(profile.descent_set.size());
  return profile;
}

int tail_descent_count(const Permutation& p, int k) {
  if (k < 1 || k > p.length()) {
    throw std::invalid_argument("tail_descent_count position " +
                                std::to_string(k) + " out of range 1.." +
                                std::to_string(p.length()));
  }
  const auto& letters = p.letters();
  int count = 0;
  for (std::size_t i = static_cast<std::size_t>(k); i < letters.size(); ++i) {
    if (letters[i - 1] > letters[i]) ++count;
  }
  return count;
}

bool are_disjoint(const Permutation& p, const Permutation& q) {
  std::unordered_set<int> letters(p.letters().begin(), p.letters().end());
  for (int x : q.letters()) {
    if (letters.count(x)) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_shuffles(const Permutation& sigma,
                                            const Permutation& pi) {
  std::vector<Permutation> out;
  for_each_shuffle(sigma, pi, [&](std::span<const int> letters) {
    out.push_back(detail::make_permutation_unchecked(
        std::vector<int>(letters.begin(), letters.end())));
  });
  return out;
}

QPoly shuffle_generating_function(const Permutation& sigma,
                                  const Permutation& pi, int k) {
  if (k < 0) {
    throw std::invalid_argument("descent count k must be non-negative");
  }
  const int total = sigma.length() + pi.length();
  std::vector<BigInt> coeffs(
      static_cast<std::size_t>(total * (total - 1) / 2) + 1, BigInt(0));
  for_each_shuffle(sigma, pi, [&](std::span<const int> letters) {
    if (detail::des_of(letters) == k) {
      coeffs[static_cast<std::size_t>(detail::maj_of(letters))] += 1;
    }
  });
  return QPoly::from_coefficients(std::move(coeffs));
}

std::vector<QPoly> shuffle_gf_by_descents(const Permutation& sigma,
                                          const Permutation& pi) {
  const int total = sigma.length() + pi.length();
  const std::size_t max_maj =
      static_cast<std::size_t>(total * (total - 1) / 2);
  std::vector<std::vector<BigInt>> buckets(
      static_cast<std::size_t>(std::max(total, 1)),
      std::vector<BigInt>(max_maj + 1, BigInt(0)));
  for_each_shuffle(sigma, pi, [&](std::span<const int> letters) {
    const detail::WordStats stats = detail::word_stats(letters);
    buckets[static_cast<std::size_t>(stats.des)]
           [static_cast<std::size_t>(stats.maj)] += 1;
  });
  std::vector<QPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    out.push_back(QPoly::from_coefficients(std::move(b)));
  }
  return out;
}

}  // namespace qshuffle
