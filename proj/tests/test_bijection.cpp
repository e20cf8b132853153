#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qshuffle/bijection.hpp"
#include "qshuffle/insertion.hpp"

using namespace qshuffle;

namespace {

const Permutation kSigma = Permutation::parse("9 3 8 10 12 4 7");
const Permutation kPi = Permutation::parse("1 2 6 5 13 11");
const Permutation kAlpha = Permutation::parse("1 9 2 6 3 5 13 8 10 12 11 4 7");

std::vector<int> pad_to(const Partition& p, int len) {
  std::vector<int> out = p.parts();
  out.resize(static_cast<std::size_t>(len), 0);
  return out;
}

// Both round-trip directions plus the counting identity for one pair.
void check_pair_exhaustively(const Permutation& sigma, const Permutation& pi) {
  const int m = sigma.length();
  const int n = pi.length();
  const int r = descent_profile(sigma).des;
  const int s = descent_profile(pi).des;
  const int maj_sigma = descent_profile(sigma).maj;
  const int maj_pi = descent_profile(pi).maj;

  std::vector<std::uint64_t> count_by_k(static_cast<std::size_t>(m + n + 2),
                                        0);
  for (const auto& alpha : enumerate_shuffles(sigma, pi)) {
    const int k = descent_profile(alpha).des;
    ++count_by_k[static_cast<std::size_t>(k)];
    const PartitionPair pair = phi(sigma, pi, alpha);
    CHECK(static_cast<int>(pair.lambda.size()) == k - r);
    CHECK(static_cast<int>(pair.mu.size()) == n - k + r);
    CHECK(pair.weight() + maj_sigma + maj_pi == descent_profile(alpha).maj);
    CHECK(psi(sigma, pi, k, pair) == alpha);

    const ShuffleDecomposition d = decompose(sigma, pi, alpha);
    CHECK(std::is_sorted(d.insertion_positions.begin(),
                         d.insertion_positions.end()));
    CHECK(d.chain.front() == alpha);
    CHECK(d.chain.back() == sigma);
    t_sequence_check(d);  // throws on any nesting violation
  }

  for (int k = r; k <= n + r; ++k) {
    std::uint64_t pairs = 0;
    if (!(n - k + r > 0 && k - s < 0) && !(k - r > 0 && k - s > m)) {
      for (const auto& lambda_part :
           enumerate_exact_partitions(k - r, std::max(k - s, 0), m)) {
        for (const auto& mu_part :
             enumerate_bounded_partitions(n - k + r, k - s)) {
          PartitionPair pair;
          pair.lambda = pad_to(lambda_part, k - r);
          pair.mu = pad_to(mu_part, n - k + r);
          ++pairs;
          const Permutation alpha = psi(sigma, pi, k, pair);
          CHECK(descent_profile(alpha).des == k);
          CHECK(phi(sigma, pi, alpha) == pair);
        }
      }
    }
    CHECK(pairs == count_by_k[static_cast<std::size_t>(k)]);
  }
}

}  // namespace

TEST_CASE("decomposition of the worked example") {
  const ShuffleDecomposition d = decompose(kSigma, kPi, kAlpha);
  CHECK(d.chain.size() == 7);
  CHECK(d.chain.front() == kAlpha);
  CHECK(d.chain.back() == kSigma);
  CHECK(d.chain[1] == Permutation::parse("9 2 6 3 5 13 8 10 12 11 4 7"));
  CHECK(d.chain[5] == Permutation::parse("9 3 8 10 12 11 4 7"));
  CHECK(d.t_values == std::vector<int>{3, 2, 3, 2, 4, 6});
  CHECK(d.descent_drop_flags ==
        std::vector<bool>{false, false, true, false, true, true});
  CHECK(d.insertion_positions == std::vector<int>{1, 2, 2, 3, 3, 6});
}

TEST_CASE("decompose validates its input") {
  CHECK_THROWS_WITH_AS(
      decompose(kSigma, kPi, Permutation::parse("1 9 2 6 3 5 13 8 10 12 11 7 4")),
      doctest::Contains("not a shuffle"), std::invalid_argument);
  CHECK_THROWS_AS(decompose(kSigma, kPi, Permutation::parse("1 2 3")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      decompose(Permutation::parse("1 2"), Permutation::parse("2 3"),
                Permutation::parse("1 2 2 3")),
      std::invalid_argument);
  // degenerate: empty pi
  const ShuffleDecomposition d = decompose(kSigma, Permutation{}, kSigma);
  CHECK(d.chain.size() == 1);
  CHECK(d.t_values.empty());
}

TEST_CASE("decomposition of the four-letter example") {
  const Permutation sigma = Permutation::parse("6 3");
  const Permutation pi = Permutation::parse("1 4");
  const ShuffleDecomposition d =
      decompose(sigma, pi, Permutation::parse("1 6 4 3"));
  CHECK(d.chain[1] == Permutation::parse("6 4 3"));
  CHECK(d.chain[2] == sigma);
  CHECK(d.t_values == std::vector<int>{2, 2});
  CHECK(d.descent_drop_flags == std::vector<bool>{false, true});
  const PartitionPair pair =
      phi(sigma, pi, Permutation::parse("1 6 4 3"));
  CHECK(pair.lambda == std::vector<int>{2});
  CHECK(pair.mu == std::vector<int>{2});
}

TEST_CASE("phi on the worked example") {
  const PartitionPair pair = phi(kSigma, kPi, kAlpha);
  CHECK(pair.lambda == std::vector<int>{6, 4, 3});
  CHECK(pair.mu == std::vector<int>{3, 2, 2});
  CHECK(pair.lambda_partition() == Partition({6, 4, 3}));
  CHECK(pair.mu_partition() == Partition({3, 2, 2}));
  CHECK(pair.weight() == 20);
}

TEST_CASE("phi degenerate cases") {
  const PartitionPair empty = phi(kSigma, Permutation{}, kSigma);
  CHECK(empty.lambda.empty());
  CHECK(empty.mu.empty());

  // single-letter pi: RL-space insertion lands in mu, LR-space in lambda
  const Permutation sigma = Permutation::parse("5 1 6 2 4");
  const Permutation pi = Permutation::parse("3");
  const CanonicalLabeling labeling = canonical_labeling(sigma, 3);
  for (int i = 0; i <= sigma.length(); ++i) {
    const Permutation alpha = insert_at(sigma, i, 3);
    const PartitionPair pair = phi(sigma, pi, alpha);
    const int label = labeling.labels[static_cast<std::size_t>(i)];
    if (labeling.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL) {
      CHECK(pair.lambda.empty());
      CHECK(pair.mu == std::vector<int>{label});
    } else {
      CHECK(pair.lambda == std::vector<int>{label});
      CHECK(pair.mu.empty());
    }
  }
}

TEST_CASE("psi rebuilds the worked example") {
  PartitionPair pair;
  pair.lambda = {6, 4, 3};
  pair.mu = {3, 2, 2};
  CHECK(psi(kSigma, kPi, 5, pair) == kAlpha);

  const PsiTrace trace = psi_trace(kSigma, kPi, 5, pair);
  CHECK(trace.alpha == kAlpha);
  std::vector<int> positions;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    positions.push_back(it->position);
  }
  CHECK(positions == std::vector<int>{1, 2, 2, 3, 3, 6});
  // the first step sees all m+1 spaces of sigma
  CHECK(trace.steps.front().t_row ==
        std::vector<int>{3, 2, 4, 5, 1, 6, 7, 0});
  CHECK(trace.steps.front().multiset == std::vector<int>{6, 4, 3, 3, 2, 2});
  CHECK(trace.steps[1].t_row == std::vector<int>{3, 2, 4, 5, 6, 1});
}

TEST_CASE("psi degenerate and single-letter cases") {
  CHECK(psi(kSigma, Permutation{}, 2, PartitionPair{}) == kSigma);

  const Permutation sigma = Permutation::parse("5 1 6 2 4");
  const Permutation pi = Permutation::parse("3");
  const CanonicalLabeling labeling = canonical_labeling(sigma, 3);
  const int r = descent_profile(sigma).des;
  for (int a = 0; a <= r; ++a) {
    PartitionPair pair;
    pair.mu = {a};
    const Permutation alpha = psi(sigma, pi, r, pair);
    // pi_1 went to the RL-space labeled a
    int space = -1;
    for (int i = 0; i <= sigma.length(); ++i) {
      if (labeling.labels[static_cast<std::size_t>(i)] == a) space = i;
    }
    CHECK(labeling.kinds[static_cast<std::size_t>(space)] == SpaceKind::RL);
    CHECK(alpha == insert_at(sigma, space, 3));
  }
}

TEST_CASE("psi validates the pair") {
  PartitionPair pair;
  pair.lambda = {6, 4, 3};
  pair.mu = {3, 2, 2};
  CHECK_THROWS_AS(psi(kSigma, kPi, 4, pair), std::invalid_argument);  // sizes
  pair.lambda = {6, 4, 1};  // below k-s
  CHECK_THROWS_AS(psi(kSigma, kPi, 5, pair), std::invalid_argument);
  pair.lambda = {6, 4, 3};
  pair.mu = {3, 2, 4};  // not weakly decreasing
  CHECK_THROWS_AS(psi(kSigma, kPi, 5, pair), std::invalid_argument);
  pair.mu = {8, 2, 2};  // above k-s
  CHECK_THROWS_AS(psi(kSigma, kPi, 5, pair), std::invalid_argument);
  pair.mu = {3, 2, -1};  // negative entry
  CHECK_THROWS_AS(psi(kSigma, kPi, 5, pair), std::invalid_argument);
  pair.lambda = {8, 4, 3};  // above m
  pair.mu = {3, 2, 2};
  CHECK_THROWS_AS(psi(kSigma, kPi, 5, pair), std::invalid_argument);
  CHECK_THROWS_AS(
      psi(Permutation::parse("1 2"), Permutation::parse("2 3"), 0,
          PartitionPair{}),
      std::invalid_argument);
}

TEST_CASE("zero lambda parts arise when k equals s") {
  const Permutation sigma = Permutation::parse("1");
  const Permutation pi = Permutation::parse("3 2");
  const Permutation alpha = Permutation::parse("3 1 2");
  const PartitionPair pair = phi(sigma, pi, alpha);
  CHECK(pair.lambda == std::vector<int>{0});
  CHECK(pair.mu == std::vector<int>{0});
  CHECK(pair.lambda_partition() == Partition{});
  CHECK(psi(sigma, pi, 1, pair) == alpha);
}

TEST_CASE("t-sequence nesting on the worked example") {
  const auto sets = t_sequence_check(decompose(kSigma, kPi, kAlpha));
  REQUIRE(sets.size() == 6);
  CHECK(sets[0] == std::set<int>{3});
  CHECK(sets[1] == std::set<int>{2, 3});
  CHECK(sets[2] == std::set<int>{2, 3});
  CHECK(sets[3] == std::set<int>{2, 3, 4});
  CHECK(sets[4] == std::set<int>{2, 3, 4});
  CHECK(sets[5] == std::set<int>{1, 2, 3, 4, 5, 6});
  for (std::size_t i = 1; i < sets.size(); ++i) {
    CHECK(std::includes(sets[i].begin(), sets[i].end(), sets[i - 1].begin(),
                        sets[i - 1].end()));
  }
}

TEST_CASE("round trips over every pair class with m+n <= 6") {
  for (int total = 0; total <= 6; ++total) {
    for (int m = 0; m <= total; ++m) {
      std::vector<int> mask(static_cast<std::size_t>(total), 0);
      std::fill(mask.begin(), mask.begin() + m, 1);
      std::sort(mask.begin(), mask.end(), std::greater<int>());
      // iterate all value splits via mask combinations
      do {
        std::vector<int> s_base, p_base;
        for (int v = 1; v <= total; ++v) {
          (mask[static_cast<std::size_t>(v - 1)] ? s_base : p_base)
              .push_back(v);
        }
        std::vector<int> s_letters = s_base;
        do {
          std::vector<int> p_letters = p_base;
          do {
            check_pair_exhaustively(Permutation(s_letters),
                                    Permutation(p_letters));
          } while (std::next_permutation(p_letters.begin(), p_letters.end()));
        } while (std::next_permutation(s_letters.begin(), s_letters.end()));
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
}

TEST_CASE("round trips on random larger instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);
    const int n = 3 + static_cast<int>(rng() % 3);
    const auto [sigma, pi] = oracles::random_disjoint_pair(rng, m, n, 50);
    for (const auto& alpha : enumerate_shuffles(sigma, pi)) {
      const PartitionPair pair = phi(sigma, pi, alpha);
      CHECK(psi(sigma, pi, descent_profile(alpha).des, pair) == alpha);
    }
  }
}
