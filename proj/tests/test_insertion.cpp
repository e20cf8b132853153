#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qshuffle/insertion.hpp"
#include "qshuffle/qpoly.hpp"

using namespace qshuffle;

TEST_CASE("insert_at") {
  const Permutation sigma = Permutation::parse("5 1 6 2 4");
  CHECK(insert_at(sigma, 0, 3).str() == "3 5 1 6 2 4");
  CHECK(insert_at(sigma, 5, 3).str() == "5 1 6 2 4 3");
  CHECK(insert_at(sigma, 3, 3).str() == "5 1 6 3 2 4");
  CHECK(insert_at(Permutation{}, 0, 7).str() == "7");
  CHECK_THROWS_AS(insert_at(sigma, 6, 3), std::invalid_argument);
  CHECK_THROWS_AS(insert_at(sigma, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(insert_at(sigma, 2, 6), std::invalid_argument);
}

TEST_CASE("space classification on the ten-letter example") {
  const Permutation sigma = Permutation::parse("10 1 9 8 2 7 4 3 6");
  const std::set<int> rl = {0, 2, 3, 5, 7, 8};
  for (int i = 0; i <= 9; ++i) {
    CHECK(classify_space(sigma, i, 5) ==
          (rl.count(i) ? SpaceKind::RL : SpaceKind::LR));
  }
  CHECK(classify_space(Permutation::parse("6 3"), 2, 14) == SpaceKind::RL);
  CHECK(classify_space(Permutation::parse("6 3"), 2, 1) == SpaceKind::LR);
  CHECK(classify_space(Permutation{}, 0, 4) == SpaceKind::RL);
}

TEST_CASE("canonical labeling of the ten-letter example") {
  const CanonicalLabeling labeling =
      canonical_labeling(Permutation::parse("10 1 9 8 2 7 4 3 6"), 5);
  CHECK(labeling.rl_count == 6);
  CHECK(labeling.labels ==
        std::vector<int>{5, 6, 4, 3, 7, 2, 8, 1, 0, 9});
  const std::vector<int> rl_spaces = {8, 7, 5, 3, 2, 0};
  for (std::size_t i = 0; i < rl_spaces.size(); ++i) {
    CHECK(labeling.labels[static_cast<std::size_t>(rl_spaces[i])] ==
          static_cast<int>(i));
  }
  const std::vector<int> lr_spaces = {1, 4, 6, 9};
  for (std::size_t i = 0; i < lr_spaces.size(); ++i) {
    CHECK(labeling.labels[static_cast<std::size_t>(lr_spaces[i])] ==
          6 + static_cast<int>(i));
  }
}

TEST_CASE("canonical labeling edge cases") {
  const CanonicalLabeling empty = canonical_labeling(Permutation{}, 3);
  CHECK(empty.rl_count == 1);
  CHECK(empty.kinds == std::vector<SpaceKind>{SpaceKind::RL});
  CHECK(empty.labels == std::vector<int>{0});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = static_cast<int>(rng() % 9);
    const auto [sigma, r] = [&] {
      const Permutation p = oracles::random_permutation(rng, len + 1, 40);
      std::vector<int> head(p.letters().begin(), p.letters().end() - 1);
      return std::pair(Permutation(head), p.letters().back());
    }();
    const CanonicalLabeling labeling = canonical_labeling(sigma, r);
    CHECK(labeling.rl_count == descent_profile(sigma).des + 1);
    std::set<int> labels(labeling.labels.begin(), labeling.labels.end());
    CHECK(static_cast<int>(labels.size()) == sigma.length() + 1);
    CHECK(*labels.begin() == 0);
    CHECK(*labels.rbegin() == sigma.length());
  }
}

TEST_CASE("major increments from the worked table") {
  const Permutation sigma = Permutation::parse("5 1 6 2 4");
  CHECK(major_increment(sigma, 3, 3) == 4);
  CHECK(major_increment(sigma, 4, 3) == 0);
  CHECK(major_increment(Permutation::parse("1 2"), 2, 3) == 0);
  CHECK(mis(sigma, 3).increments == std::vector<int>{2, 3, 1, 4, 0, 5});
}

TEST_CASE("labels equal increments and descent change matches the kind") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int len = static_cast<int>(rng() % 10);
    const Permutation p = oracles::random_permutation(rng, len + 1, 40);
    std::vector<int> head(p.letters().begin(), p.letters().end() - 1);
    const Permutation sigma{head};
    const int r = p.letters().back();
    const CanonicalLabeling labeling = canonical_labeling(sigma, r);
    const int des_sigma = descent_profile(sigma).des;
    std::set<int> increments;
    for (int i = 0; i <= sigma.length(); ++i) {
      const int inc = major_increment(sigma, i, r);
      CHECK(inc == labeling.labels[static_cast<std::size_t>(i)]);
      increments.insert(inc);
      const Permutation inserted = insert_at(sigma, i, r);
      const int expected =
          labeling.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL
              ? des_sigma
              : des_sigma + 1;
      CHECK(descent_profile(inserted).des == expected);
    }
    // insertion relation: increments are exactly {0..n}
    CHECK(static_cast<int>(increments.size()) == sigma.length() + 1);
    CHECK(*increments.begin() == 0);
    CHECK(*increments.rbegin() == sigma.length());
  }
}

TEST_CASE("insertion relation in generating-function form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int len = static_cast<int>(rng() % 8);
    const Permutation p = oracles::random_permutation(rng, len + 1, 30);
    std::vector<int> head(p.letters().begin(), p.letters().end() - 1);
    const Permutation sigma{head};
    const int r = p.letters().back();
    QPoly lhs;
    for (int i = 0; i <= sigma.length(); ++i) {
      lhs += QPoly::monomial(descent_profile(insert_at(sigma, i, r)).maj);
    }
    CHECK(lhs ==
          q_bracket(sigma.length() + 1).shifted(descent_profile(sigma).maj));
  }
}

TEST_CASE("fast maj delta equals literal insertion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int len = static_cast<int>(rng() % 11);
    const Permutation p = oracles::random_permutation(rng, len + 1, 60);
    std::vector<int> head(p.letters().begin(), p.letters().end() - 1);
    const Permutation sigma{head};
    const int r = p.letters().back();
    std::vector<int> tails;
    detail::tail_descent_table(sigma.letters(), tails);
    for (int i = 0; i <= sigma.length(); ++i) {
      CHECK(detail::insert_maj_delta(sigma.letters(), tails, i, r) ==
            major_increment(sigma, i, r));
    }
  }
}

TEST_CASE("MIS sequences from the four worked examples") {
  const Permutation sigma = Permutation::parse("5 8 1 4 6 2");
  CHECK(mis(sigma, 7).increments == std::vector<int>{3, 2, 4, 5, 6, 1, 0});
  CHECK(mis(sigma, 9).increments == std::vector<int>{3, 4, 2, 5, 6, 1, 0});
  CHECK(mis(insert_at(sigma, 4, 7), 9).increments ==
        std::vector<int>{4, 5, 3, 6, 7, 2, 1, 0});
  CHECK(mis(insert_at(sigma, 4, 9), 7).increments ==
        std::vector<int>{4, 3, 5, 6, 2, 7, 1, 0});
}

TEST_CASE("MIS is a shuffling of k+1..n and k..0 with extreme growth") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = static_cast<int>(rng() % 10);
    const Permutation p = oracles::random_permutation(rng, len + 1, 40);
    std::vector<int> head(p.letters().begin(), p.letters().end() - 1);
    const Permutation sigma{head};
    const int r = p.letters().back();
    const int k = descent_profile(sigma).des;
    const auto seq = mis(sigma, r).increments;
    int up = k + 1, down = k;
    int low = seq[0], high = seq[0];
    CHECK((seq[0] == k || seq[0] == k + 1));
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) {
        const bool grew = seq[i] == high + 1;
        const bool shrank = seq[i] == low - 1;
        CHECK((grew || shrank));
        const Permutation inserted =
            insert_at(sigma, static_cast<int>(i), r);
        const bool raised =
            descent_profile(inserted).des == descent_profile(sigma).des + 1;
        CHECK(grew == raised);
      }
      // the sequence interleaves the two runs k+1..n and k..0
      if (seq[i] > k) {
        CHECK(seq[i] == up++);
      } else {
        CHECK(seq[i] == down--);
      }
      low = std::min(low, seq[i]);
      high = std::max(high, seq[i]);
    }
  }
}

TEST_CASE("building S_n by repeated insertion recovers the q-factorial") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<Permutation> current = {Permutation{}};
    for (int letter = 1; letter <= n; ++letter) {
      std::vector<Permutation> next;
      next.reserve(current.size() * static_cast<std::size_t>(letter));
      for (const auto& p : current) {
        for (int space = 0; space <= p.length(); ++space) {
          next.push_back(insert_at(p, space, letter));
        }
      }
      current = std::move(next);
    }
    QPoly sum;
    for (const auto& p : current) {
      sum += QPoly::monomial(descent_profile(p).maj);
    }
    CHECK(sum == q_factorial(n));
  }
}

TEST_CASE("MIS prefix sets") {
  const Permutation sigma = Permutation::parse("5 8 1 4 6 2");
  CHECK(mis_prefix_set(sigma, 5, 7) == std::set<int>{2, 3, 4, 5, 6});
  CHECK(mis_prefix_set(Permutation::parse("5 8 1 4 7 6 2"), 5, 9) ==
        std::set<int>{3, 4, 5, 6, 7});
  CHECK(mis_prefix_set(sigma, 0, 7).empty());
  CHECK(mis_prefix_set(sigma, 7, 9).size() == 7);
  CHECK_THROWS_AS(mis_prefix_set(sigma, 8, 7), std::invalid_argument);
  CHECK_THROWS_AS(mis_prefix_set(sigma, -1, 7), std::invalid_argument);
}

TEST_CASE("prefix shift under a prior insertion") {
  // inserting p before sigma_i shifts the first i increments by [q > p]
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = static_cast<int>(rng() % 8);
    const Permutation full = oracles::random_permutation(rng, len + 2, 40);
    std::vector<int> head(full.letters().begin(), full.letters().end() - 2);
    const Permutation sigma{head};
    const int p = full.letters()[full.letters().size() - 2];
    const int q = full.letters().back();
    for (int i = 1; i <= sigma.length() + 1; ++i) {
      const auto base = mis_prefix_set(sigma, i, p);
      std::set<int> expected;
      for (int x : base) expected.insert(x + (q > p ? 1 : 0));
      CHECK(mis_prefix_set(insert_at(sigma, i - 1, p), i, q) == expected);
    }
  }
}
