#include "qshuffle/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qshuffle {

namespace {

std::string pair_str(const PartitionPair& pair) {
  auto render = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(v[i]);
    }
    return out + ")";
  };
  return "lambda=" + render(pair.lambda) + " mu=" + render(pair.mu);
}

// Validates the full inequality chain
// m >= lambda_1 >= ... >= lambda_{k-r} >= k-s >= mu_1 >= ... >= mu_* >= 0.
void require_pair_chain(int m, int k_minus_s, const std::vector<int>& lambda,
                        const std::vector<int>& mu,
                        const PartitionPair& pair) {
  int prev = m;
  auto step = [&](int value) {
    if (value > prev) {
      throw std::invalid_argument("partition pair violates the bound chain: " +
                                  pair_str(pair));
    }
    prev = value;
  };
  for (int part : lambda) step(part);
  step(k_minus_s);
  for (int part : mu) step(part);
  step(0);
}

void require_shuffle_letters(const Permutation& sigma, const Permutation& pi,
                             const Permutation& alpha) {
  detail::require_disjoint(sigma, pi);
  const auto& a = alpha.letters();
  const auto& s = sigma.letters();
  const auto& p = pi.letters();
  if (a.size() != s.size() + p.size()) {
    throw std::invalid_argument(
        "alpha has length " + std::to_string(a.size()) + ", expected " +
        std::to_string(s.size() + p.size()));
  }
  std::size_t si = 0, pj = 0;
  for (std::size_t pos = 0; pos < a.size(); ++pos) {
    if (si < s.size() && a[pos] == s[si]) {
      ++si;
    } else if (pj < p.size() && a[pos] == p[pj]) {
      ++pj;
    } else {
      std::string expected;
      if (si < s.size()) expected += " sigma_" + std::to_string(si + 1) + "=" +
                                     std::to_string(s[si]);
      if (pj < p.size()) expected += " pi_" + std::to_string(pj + 1) + "=" +
                                     std::to_string(p[pj]);
      throw std::invalid_argument(
          "alpha is not a shuffle: letter " + std::to_string(a[pos]) +
          " at position " + std::to_string(pos + 1) +
          " matches neither of the next letters" + expected);
    }
  }
}

struct PsiOptions {
  bool record_trace = false;
};

Permutation psi_impl(const Permutation& sigma, const Permutation& pi, int k,
                     const PartitionPair& pair, const PsiOptions& options,
                     PsiTrace* trace) {
  detail::require_disjoint(sigma, pi);
  const int m = sigma.length();
  const int n = pi.length();
  const int r = detail::des_of(sigma.letters());
  const int s = detail::des_of(pi.letters());
  if (static_cast<int>(pair.lambda.size()) != k - r) {
    throw std::invalid_argument(
        "lambda must have k - des(sigma) = " + std::to_string(k - r) +
        " entries, got " + std::to_string(pair.lambda.size()));
  }
  if (static_cast<int>(pair.mu.size()) != n - k + r) {
    throw std::invalid_argument(
        "mu must have n - k + des(sigma) = " + std::to_string(n - k + r) +
        " entries, got " + std::to_string(pair.mu.size()));
  }
  require_pair_chain(m, k - s, pair.lambda, pair.mu, pair);

  // multiset of all n values, non-increasing (lambda >= k-s >= mu)
  std::vector<int> multiset;
  multiset.reserve(static_cast<std::size_t>(n));
  multiset.insert(multiset.end(), pair.lambda.begin(), pair.lambda.end());
  multiset.insert(multiset.end(), pair.mu.begin(), pair.mu.end());

  std::vector<int> pi_tails;
  detail::tail_descent_table(pi.letters(), pi_tails);

  std::vector<int> work = sigma.letters();
  work.reserve(static_cast<std::size_t>(m + n));
  std::vector<int> tails;
  std::vector<int> t_row;
  int next_position = m + 1;  // k_{n+1}

  for (int i = n; i >= 1; --i) {
    const int letter = pi.letter_at(i);
    const int tail = pi_tails[static_cast<std::size_t>(i)];
    detail::tail_descent_table(work, tails);
    t_row.clear();
    for (int j = 1; j <= next_position; ++j) {
      t_row.push_back(detail::insert_maj_delta(work, tails, j - 1, letter) -
                      tail);
    }
    int position = 0;
    for (int j = next_position; j >= 1; --j) {
      const int value = t_row[static_cast<std::size_t>(j - 1)];
      if (std::find(multiset.begin(), multiset.end(), value) !=
          multiset.end()) {
        position = j;
        break;
      }
    }
    if (position == 0) {
      throw std::logic_error(
          "no insertion position found for pi_" + std::to_string(i) +
          " while inverting " + pair_str(pair));
    }
    if (options.record_trace) {
      PsiStep step;
      step.index = i;
      step.letter = letter;
      step.t_row = t_row;
      step.multiset = multiset;
      step.position = position;
      step.before = detail::make_permutation_unchecked(work);
      trace->steps.push_back(std::move(step));
    }
    const int chosen = t_row[static_cast<std::size_t>(position - 1)];
    multiset.erase(std::find(multiset.begin(), multiset.end(), chosen));
    work.insert(work.begin() + (position - 1), letter);
    next_position = position;
  }

  if (detail::des_of(work) != k) {
    throw std::logic_error("inverse map produced " + std::to_string(
                               detail::des_of(work)) +
                           " descents instead of " + std::to_string(k));
  }
  return detail::make_permutation_unchecked(std::move(work));
}

}  // namespace

long long PartitionPair::weight() const {
  long long sum = 0;
  for (int x : lambda) sum += x;
  for (int x : mu) sum += x;
  return sum;
}

ShuffleDecomposition decompose(const Permutation& sigma, const Permutation& pi,
                               const Permutation& alpha) {
  require_shuffle_letters(sigma, pi, alpha);
  const int n = pi.length();

  std::vector<int> pi_tails;
  detail::tail_descent_table(pi.letters(), pi_tails);

  ShuffleDecomposition out;
  out.chain.reserve(static_cast<std::size_t>(n) + 1);
  out.chain.push_back(alpha);
  out.t_values.reserve(static_cast<std::size_t>(n));
  out.descent_drop_flags.reserve(static_cast<std::size_t>(n));
  out.insertion_positions.reserve(static_cast<std::size_t>(n));

  std::vector<int> work = alpha.letters();
  int maj_prev = detail::maj_of(work);
  int des_prev = detail::des_of(work);
  for (int i = 1; i <= n; ++i) {
    const int letter = pi.letter_at(i);
    const auto it = std::find(work.begin(), work.end(), letter);
    out.insertion_positions.push_back(
        static_cast<int>(it - work.begin()) + 1);
    work.erase(it);
    const int maj_cur = detail::maj_of(work);
    const int des_cur = detail::des_of(work);
    out.t_values.push_back(maj_prev - maj_cur -
                           pi_tails[static_cast<std::size_t>(i)]);
    if (des_prev != des_cur && des_prev != des_cur + 1) {
      throw std::logic_error("removal changed descent count by more than 1");
    }
    out.descent_drop_flags.push_back(des_prev == des_cur + 1);
    out.chain.push_back(detail::make_permutation_unchecked(work));
    maj_prev = maj_cur;
    des_prev = des_cur;
  }
  return out;
}

PartitionPair phi(const Permutation& sigma, const Permutation& pi,
                  const Permutation& alpha) {
  const ShuffleDecomposition d = decompose(sigma, pi, alpha);
  const int n = pi.length();
  PartitionPair pair;
  for (int i = n; i >= 1; --i) {
    if (d.descent_drop_flags[static_cast<std::size_t>(i - 1)]) {
      pair.lambda.push_back(d.t_values[static_cast<std::size_t>(i - 1)]);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!d.descent_drop_flags[static_cast<std::size_t>(i - 1)]) {
      pair.mu.push_back(d.t_values[static_cast<std::size_t>(i - 1)]);
    }
  }

  const int k = detail::des_of(alpha.letters());
  const int s = detail::des_of(pi.letters());
  require_pair_chain(sigma.length(), k - s, pair.lambda, pair.mu, pair);
  const int maj_alpha = detail::maj_of(alpha.letters());
  const int maj_parts = detail::maj_of(sigma.letters()) +
                        detail::maj_of(pi.letters());
  if (pair.weight() + maj_parts != maj_alpha) {
    throw std::logic_error("weight law violated for alpha=" + alpha.str() +
                           ": " + pair_str(pair));
  }
  return pair;
}

Permutation psi(const Permutation& sigma, const Permutation& pi, int k,
                const PartitionPair& pair) {
  return psi_impl(sigma, pi, k, pair, PsiOptions{}, nullptr);
}

PsiTrace psi_trace(const Permutation& sigma, const Permutation& pi, int k,
                   const PartitionPair& pair) {
  PsiTrace trace;
  trace.alpha =
      psi_impl(sigma, pi, k, pair, PsiOptions{.record_trace = true}, &trace);
  return trace;
}

std::vector<std::set<int>> t_sequence_check(const ShuffleDecomposition& d) {
  const std::size_t n = d.t_values.size();
  if (d.chain.size() != n + 1 || d.descent_drop_flags.size() != n ||
      d.insertion_positions.size() != n) {
    throw std::invalid_argument("inconsistent decomposition sizes");
  }
  const int m = d.chain.back().length();

  // recover pi_i as the letter removed between chain[i-1] and chain[i]
  std::vector<int> removed(n, -1);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& longer = d.chain[i - 1].letters();
    const auto& shorter = d.chain[i].letters();
    if (longer.size() != shorter.size() + 1) {
      throw std::invalid_argument("chain lengths must decrease by one");
    }
    std::size_t j = 0;
    while (j < shorter.size() && longer[j] == shorter[j]) ++j;
    removed[i - 1] = longer[j];
  }
  const Permutation pi_recovered =
      detail::make_permutation_unchecked(std::vector<int>(removed));
  std::vector<int> pi_tails;
  detail::tail_descent_table(pi_recovered.letters(), pi_tails);

  std::vector<std::set<int>> sets;
  sets.reserve(n);
  std::vector<int> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& base = d.chain[i].letters();
    const int letter = removed[i - 1];
    const int tail = pi_tails[i];
    const int row_len = d.insertion_positions[i - 1];
    detail::tail_descent_table(base, tails);
    std::set<int> st;
    int last = 0;
    for (int j = 1; j <= row_len; ++j) {
      last = detail::insert_maj_delta(base, tails, j - 1, letter) - tail;
      if (!st.insert(last).second) {
        throw std::logic_error("duplicate entry in T^(" + std::to_string(i) +
                               ")");
      }
    }
    if (last != d.t_values[i - 1]) {
      throw std::logic_error("last entry of T^(" + std::to_string(i) +
                             ") does not equal t(" + std::to_string(i) + ")");
    }
    const int extreme =
        d.descent_drop_flags[i - 1] ? *st.rbegin() : *st.begin();
    if (last != extreme) {
      throw std::logic_error("t(" + std::to_string(i) +
                             ") is not the extreme element of ST^(" +
                             std::to_string(i) + ")");
    }
    if (i > 1 &&
        !std::includes(st.begin(), st.end(), sets.back().begin(),
                       sets.back().end())) {
      throw std::logic_error("ST^(" + std::to_string(i - 1) +
                             ") is not contained in ST^(" + std::to_string(i) +
                             ")");
    }
    sets.push_back(std::move(st));
  }
  if (!sets.empty() &&
      (*sets.back().begin() < 0 || *sets.back().rbegin() > m)) {
    throw std::logic_error("ST^(n) escapes {0..m}");
  }
  return sets;
}

}  // namespace qshuffle
