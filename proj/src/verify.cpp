#include "qshuffle/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstring>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "qshuffle/bijection.hpp"
#include "qshuffle/insertion.hpp"
#include "qshuffle/partitions.hpp"
#include "qshuffle/qpoly.hpp"

namespace qshuffle {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string count_str(std::uint64_t v) { return std::to_string(v); }

std::string ints_str(const int* values, int len) {
  std::string out;
  for (int i = 0; i < len; ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::stanley:
      return "stanley";
    case Theorem::garsia_gessel:
      return "garsia_gessel";
    case Theorem::macmahon:
      return "macmahon";
    case Theorem::insertion_lemma:
      return "insertion_lemma";
    case Theorem::bijection_roundtrip:
      return "bijection_roundtrip";
    case Theorem::novick_prefix:
      return "novick_prefix";
  }
  return "unknown";
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
  for (Theorem t :
       {Theorem::stanley, Theorem::garsia_gessel, Theorem::macmahon,
        Theorem::insertion_lemma, Theorem::bijection_roundtrip,
        Theorem::novick_prefix}) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

bool equivalent(const VerificationReport& a, const VerificationReport& b) {
  return a.theorem == b.theorem && a.parameters == b.parameters &&
         a.lhs == b.lhs && a.rhs == b.rhs && a.pass == b.pass;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = std::string(theorem_name(r.theorem));
  j["parameters"] = r.parameters;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump();
}

VerificationReport report_from_json(std::string_view text) {
  const auto j = nlohmann::ordered_json::parse(text);
  VerificationReport r;
  const auto name = j.at("theorem").get<std::string>();
  const auto t = theorem_from_name(name);
  if (!t) throw std::invalid_argument("unknown theorem name: " + name);
  r.theorem = *t;
  r.parameters = j.at("parameters").get<std::string>();
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail") {
    throw std::invalid_argument("unknown verdict: " + verdict);
  }
  r.pass = verdict == "pass";
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return r;
}

std::vector<VerificationReport> verify_stanley(const Permutation& sigma,
                                               const Permutation& pi) {
  const auto start = Clock::now();
  const auto gfs = shuffle_gf_by_descents(sigma, pi);
  const int m = sigma.length();
  const int n = pi.length();
  const int r = detail::des_of(sigma.letters());
  const int s = detail::des_of(pi.letters());
  const int maj_sigma = detail::maj_of(sigma.letters());
  const int maj_pi = detail::maj_of(pi.letters());

  std::vector<VerificationReport> out;
  const int k_end = std::max(m + n - 1, 0);
  for (int k = 0; k <= k_end; ++k) {
    const QPoly& lhs = gfs[static_cast<std::size_t>(k)];
    const QPoly rhs = stanley_rhs(m, n, r, s, k, maj_sigma, maj_pi);
    VerificationReport rep;
    rep.theorem = Theorem::stanley;
    rep.parameters = "sigma=" + sigma.str() + " pi=" + pi.str() +
                     " k=" + std::to_string(k);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.pass = lhs == rhs;
    out.push_back(std::move(rep));
  }
  const double elapsed = seconds_since(start);
  for (auto& rep : out) rep.elapsed_seconds = elapsed;
  return out;
}

VerificationReport verify_garsia_gessel(const Permutation& sigma,
                                        const Permutation& pi) {
  const auto start = Clock::now();
  detail::require_disjoint(sigma, pi);
  const int total = sigma.length() + pi.length();
  std::vector<BigInt> coeffs(
      static_cast<std::size_t>(total * (total - 1) / 2) + 1, BigInt(0));
  for_each_shuffle(sigma, pi, [&](std::span<const int> letters) {
    coeffs[static_cast<std::size_t>(detail::maj_of(letters))] += 1;
  });
  const QPoly lhs = QPoly::from_coefficients(std::move(coeffs));
  const QPoly rhs =
      garsia_gessel_rhs(sigma.length(), pi.length(),
                        detail::maj_of(sigma.letters()),
                        detail::maj_of(pi.letters()));
  VerificationReport rep;
  rep.theorem = Theorem::garsia_gessel;
  rep.parameters = "sigma=" + sigma.str() + " pi=" + pi.str();
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.pass = lhs == rhs;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_macmahon(int n, int cap) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument("macmahon size " + std::to_string(n) +
                                " outside 0.." + std::to_string(cap));
  }
  const auto start = Clock::now();
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  std::vector<BigInt> coeffs(
      static_cast<std::size_t>(n * (n - 1) / 2) + 1, BigInt(0));
  do {
    coeffs[static_cast<std::size_t>(detail::maj_of(letters))] += 1;
  } while (std::next_permutation(letters.begin(), letters.end()));
  const QPoly lhs = QPoly::from_coefficients(std::move(coeffs));
  const QPoly rhs = q_factorial(n);
  VerificationReport rep;
  rep.theorem = Theorem::macmahon;
  rep.parameters = "n=" + std::to_string(n);
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.pass = lhs == rhs;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_insertion_lemma(const Permutation& sigma,
                                          int letter) {
  const auto start = Clock::now();
  const CanonicalLabeling labeling = canonical_labeling(sigma, letter);
  const int n = sigma.length();
  const int des_sigma = detail::des_of(sigma.letters());
  const int maj_sigma = detail::maj_of(sigma.letters());

  bool pass = labeling.rl_count == des_sigma + 1;
  QPoly lhs;
  for (int i = 0; i <= n; ++i) {
    const Permutation inserted = insert_at(sigma, i, letter);
    const int maj_inserted = detail::maj_of(inserted.letters());
    const int des_inserted = detail::des_of(inserted.letters());
    lhs += QPoly::monomial(maj_inserted);
    if (maj_inserted - maj_sigma !=
        labeling.labels[static_cast<std::size_t>(i)]) {
      pass = false;
    }
    const int expected_des =
        labeling.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL
            ? des_sigma
            : des_sigma + 1;
    if (des_inserted != expected_des) pass = false;
  }
  const QPoly rhs = q_bracket(n + 1).shifted(maj_sigma);
  pass = pass && lhs == rhs;

  VerificationReport rep;
  rep.theorem = Theorem::insertion_lemma;
  rep.parameters = "sigma=" + sigma.str() + " letter=" +
                   std::to_string(letter) +
                   " rl_count=" + std::to_string(labeling.rl_count);
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.pass = pass;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_q_chu_vandermonde(int max_mn) {
  if (max_mn < 0) {
    throw std::invalid_argument("max_mn must be non-negative");
  }
  const auto start = Clock::now();
  std::uint64_t checks = 0;
  std::uint64_t passed = 0;
  for (int n = 0; n <= max_mn; ++n) {
    for (int m = 0; m <= max_mn; ++m) {
      for (int h = 0; h <= n + m; ++h) {
        QPoly sum;
        for (int k = 0; k <= h; ++k) {
          sum += (gaussian_binomial(n, k) * gaussian_binomial(m, h - k))
                     .shifted((n - k) * (h - k));
        }
        ++checks;
        if (sum == gaussian_binomial(m + n, h)) ++passed;
      }
      // the same identity phrased through the theorem closed forms
      for (int r = 0; r <= std::max(m - 1, 0); ++r) {
        for (int s = 0; s <= std::max(n - 1, 0); ++s) {
          QPoly sum;
          for (int k = 0; k <= m + n; ++k) {
            sum += stanley_rhs(m, n, r, s, k, 0, 0);
          }
          ++checks;
          if (sum == garsia_gessel_rhs(m, n, 0, 0)) ++passed;
        }
      }
    }
  }
  VerificationReport rep;
  rep.theorem = Theorem::garsia_gessel;
  rep.parameters =
      "q-Chu-Vandermonde: sum_k [n k][m h-k] q^{(n-k)(h-k)} = [m+n h] and "
      "sum_k stanley_rhs = garsia_gessel_rhs, n,m <= " +
      std::to_string(max_mn);
  rep.lhs = count_str(checks);
  rep.rhs = count_str(passed);
  rep.pass = checks == passed;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive sweep engine.
//
// Instances are generated as every split of {1..N} into sigma-letters and
// pi-letters times every ordering of each side; statistics depend only on
// relative order, so this covers every disjoint pair class with m+n = N.
// The per-shuffle work runs through allocation-free kernels; closed-form
// right-hand sides come from tables built once per sweep.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxSweepTotal = 12;
constexpr int kMaxLen = kMaxSweepTotal + 1;
constexpr int kMaxMaj = kMaxSweepTotal * (kMaxSweepTotal - 1) / 2;

enum FamilyBits : unsigned {
  kFamStanley = 1u,
  kFamGarsia = 2u,
  kFamRoundtrip = 4u,
  kFamNovick = 8u,
};

std::uint32_t stanley_key(int m, int n, int r, int s, int k) {
  return static_cast<std::uint32_t>(
      (((m * 13 + n) * 13 + r) * 13 + s) * 13 + k);
}

std::uint32_t gg_key(int total, int m) {
  return static_cast<std::uint32_t>(total * 13 + m);
}

struct RhsTables {
  std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> stanley;
  std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> gg;
};

std::vector<std::uint64_t> poly_to_counts(const QPoly& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    out.push_back(c.convert_to<std::uint64_t>());
  }
  return out;
}

RhsTables build_tables(int max_total, unsigned families) {
  RhsTables tables;
  if (families & kFamStanley) {
    for (int total = 0; total <= max_total; ++total) {
      for (int m = 0; m <= total; ++m) {
        const int n = total - m;
        for (int r = 0; r <= std::max(m - 1, 0); ++r) {
          for (int s = 0; s <= std::max(n - 1, 0); ++s) {
            for (int k = 0; k <= std::max(total - 1, 0); ++k) {
              const QPoly left = gaussian_binomial(m - r + s, k - r);
              const QPoly right = gaussian_binomial(n - s + r, k - s);
              QPoly product;
              if (!left.is_zero() && !right.is_zero()) {
                product = (left * right).shifted((k - s) * (k - r));
              }
              tables.stanley.emplace(stanley_key(m, n, r, s, k),
                                     poly_to_counts(product));
            }
          }
        }
      }
    }
  }
  if (families & kFamGarsia) {
    for (int total = 0; total <= max_total; ++total) {
      for (int m = 0; m <= total; ++m) {
        tables.gg.emplace(gg_key(total, m),
                          poly_to_counts(gaussian_binomial(total, m)));
      }
    }
  }
  return tables;
}

struct PairJob {
  int total = 0;
  int m = 0;
  int n = 0;
  int r = 0;
  int s = 0;
  int maj_sigma = 0;
  int maj_pi = 0;
  std::array<int, kMaxLen> sigma{};
  std::array<int, kMaxLen> pi{};
  std::array<int, kMaxLen + 2> pi_tails{};

  std::string describe() const {
    return "sigma=" + ints_str(sigma.data(), m) + " pi=" +
           ints_str(pi.data(), n);
  }
};

struct FamilyTally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::pair<std::uint64_t, VerificationReport>> reports;
};

struct ThreadTally {
  std::uint64_t pairs = 0;
  std::uint64_t shuffles = 0;
  FamilyTally stanley, gg, roundtrip, novick;
};

struct Workspace {
  std::array<int, kMaxLen> buf{};       // current shuffle
  std::array<int, kMaxLen> work{};      // removal chain state
  std::array<int, kMaxLen> rebuilt{};   // inverse-map output
  std::array<int, kMaxLen + 2> tails{};
  std::array<int, kMaxLen + 1> t_row{};
  std::array<int, kMaxLen> t_values{};
  std::array<int, kMaxLen> positions{};
  std::array<bool, kMaxLen> flags{};
  std::array<int, kMaxLen> lambda{};
  std::array<int, kMaxLen> mu{};
  std::array<int, kMaxLen> mset{};
  std::array<int, kMaxLen> odo_lambda{};
  std::array<int, kMaxLen> odo_mu{};
  std::array<int, kMaxLen> comb{};
  std::array<std::uint64_t, kMaxLen> count_by_k{};
  std::array<std::array<std::uint32_t, kMaxMaj + 1>, kMaxLen> cnt{};
};

int kdes(const int* a, int len) {
  return detail::des_of(std::span<const int>(a, static_cast<std::size_t>(len)));
}

int kmaj(const int* a, int len) {
  return detail::maj_of(std::span<const int>(a, static_cast<std::size_t>(len)));
}

// Decomposition + forward map + invariant checks for one shuffle. Returns
// false on the first violated check and describes it in *why.
// On success ws.lambda/ws.mu hold the padded pair and *k_out = des(alpha).
bool kernel_decompose_phi(const PairJob& job, const int* alpha, Workspace& ws,
                          bool check_nesting, int* k_out, int* lambda_len,
                          int* mu_len, std::string* why) {
  const int n = job.n;
  const int total = job.total;
  std::memcpy(ws.work.data(), alpha,
              static_cast<std::size_t>(total) * sizeof(int));
  int len = total;
  const detail::WordStats alpha_stats = detail::word_stats(
      std::span<const int>(ws.work.data(), static_cast<std::size_t>(len)));
  int maj_prev = alpha_stats.maj;
  int des_prev = alpha_stats.des;
  const int maj_alpha = maj_prev;
  const int k = des_prev;
  std::uint32_t prev_mask = 0;

  for (int i = 1; i <= n; ++i) {
    const int letter = job.pi[static_cast<std::size_t>(i - 1)];
    int p = 0;
    while (ws.work[static_cast<std::size_t>(p)] != letter) ++p;
    ws.positions[static_cast<std::size_t>(i - 1)] = p + 1;
    if (i >= 2 && ws.positions[static_cast<std::size_t>(i - 1)] <
                      ws.positions[static_cast<std::size_t>(i - 2)]) {
      if (why) *why = "insertion positions are not monotone";
      return false;
    }
    std::memmove(ws.work.data() + p, ws.work.data() + p + 1,
                 static_cast<std::size_t>(len - p - 1) * sizeof(int));
    --len;
    const std::span<const int> base(ws.work.data(),
                                    static_cast<std::size_t>(len));
    const detail::WordStats cur =
        check_nesting
            ? detail::tail_table_and_stats(
                  base, std::span<int>(ws.tails.data(), ws.tails.size()))
            : detail::word_stats(base);
    const int maj_cur = cur.maj;
    const int des_cur = cur.des;
    const int t = maj_prev - maj_cur -
                  job.pi_tails[static_cast<std::size_t>(i)];
    ws.t_values[static_cast<std::size_t>(i - 1)] = t;
    const bool flag = des_prev == des_cur + 1;
    if (!flag && des_prev != des_cur) {
      if (why) *why = "removal changed descents by more than one";
      return false;
    }
    ws.flags[static_cast<std::size_t>(i - 1)] = flag;

    if (check_nesting) {
      std::uint32_t mask = 0;
      int last = 0;
      const int row_len = ws.positions[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= row_len; ++j) {
        last = detail::insert_maj_delta(
                   base, std::span<const int>(ws.tails.data(),
                                              ws.tails.size()),
                   j - 1, letter) -
               job.pi_tails[static_cast<std::size_t>(i)];
        if (last < 0 || last > job.m) {
          if (why) *why = "T entry escapes {0..m}";
          return false;
        }
        const std::uint32_t bit = 1u << last;
        if (mask & bit) {
          if (why) *why = "duplicate T entry";
          return false;
        }
        mask |= bit;
      }
      if (last != t) {
        if (why) *why = "last T entry differs from t(i)";
        return false;
      }
      const int low = std::countr_zero(mask);
      const int high = 31 - std::countl_zero(mask);
      if (flag ? (last != high) : (last != low)) {
        if (why) *why = "t(i) is not the extreme element of ST^(i)";
        return false;
      }
      if ((prev_mask & ~mask) != 0) {
        if (why) *why = "ST sets are not nested";
        return false;
      }
      prev_mask = mask;
    }

    maj_prev = maj_cur;
    des_prev = des_cur;
  }

  // split the t-values into the padded pair
  int ll = 0, ml = 0;
  for (int i = n; i >= 1; --i) {
    if (ws.flags[static_cast<std::size_t>(i - 1)]) {
      ws.lambda[static_cast<std::size_t>(ll++)] =
          ws.t_values[static_cast<std::size_t>(i - 1)];
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!ws.flags[static_cast<std::size_t>(i - 1)]) {
      ws.mu[static_cast<std::size_t>(ml++)] =
          ws.t_values[static_cast<std::size_t>(i - 1)];
    }
  }
  if (ll != k - job.r) {
    if (why) *why = "descent-drop count differs from k-r";
    return false;
  }

  // membership chain m >= lambda... >= k-s >= mu... >= 0
  int prev = job.m;
  bool chain_ok = true;
  for (int i = 0; i < ll; ++i) {
    chain_ok = chain_ok && ws.lambda[static_cast<std::size_t>(i)] <= prev;
    prev = ws.lambda[static_cast<std::size_t>(i)];
  }
  chain_ok = chain_ok && k - job.s <= prev;
  prev = k - job.s;
  for (int i = 0; i < ml; ++i) {
    chain_ok = chain_ok && ws.mu[static_cast<std::size_t>(i)] <= prev;
    prev = ws.mu[static_cast<std::size_t>(i)];
  }
  chain_ok = chain_ok && prev >= 0;
  if (!chain_ok) {
    if (why) *why = "pair violates the membership chain";
    return false;
  }

  // weight law
  long long weight = 0;
  for (int i = 0; i < n; ++i) weight += ws.t_values[static_cast<std::size_t>(i)];
  if (weight + job.maj_sigma + job.maj_pi != maj_alpha) {
    if (why) *why = "weight law violated";
    return false;
  }

  *k_out = k;
  *lambda_len = ll;
  *mu_len = ml;
  return true;
}

// Inverse map on raw arrays; writes the rebuilt shuffle into ws.rebuilt.
bool kernel_psi(const PairJob& job, int k, const int* lambda, int lambda_len,
                const int* mu, int mu_len, Workspace& ws, std::string* why) {
  const int m = job.m;
  const int n = job.n;
  std::memcpy(ws.rebuilt.data(), job.sigma.data(),
              static_cast<std::size_t>(m) * sizeof(int));
  int len = m;

  int msize = 0;
  for (int i = 0; i < lambda_len; ++i) {
    ws.mset[static_cast<std::size_t>(msize++)] = lambda[i];
  }
  for (int i = 0; i < mu_len; ++i) {
    ws.mset[static_cast<std::size_t>(msize++)] = mu[i];
  }

  int next_position = m + 1;
  for (int i = n; i >= 1; --i) {
    const int letter = job.pi[static_cast<std::size_t>(i - 1)];
    const int tail = job.pi_tails[static_cast<std::size_t>(i)];
    const std::span<const int> base(ws.rebuilt.data(),
                                    static_cast<std::size_t>(len));
    detail::tail_descent_table(
        base, std::span<int>(ws.tails.data(), ws.tails.size()));
    int position = 0;
    int chosen = 0;
    for (int j = next_position; j >= 1; --j) {
      const int value =
          detail::insert_maj_delta(
              base,
              std::span<const int>(ws.tails.data(), ws.tails.size()), j - 1,
              letter) -
          tail;
      bool in_mset = false;
      for (int q = 0; q < msize; ++q) {
        if (ws.mset[static_cast<std::size_t>(q)] == value) {
          in_mset = true;
          break;
        }
      }
      if (in_mset) {
        position = j;
        chosen = value;
        break;
      }
    }
    if (position == 0) {
      if (why) *why = "no insertion position found at step " +
                      std::to_string(i);
      return false;
    }
    for (int q = 0; q < msize; ++q) {
      if (ws.mset[static_cast<std::size_t>(q)] == chosen) {
        std::memmove(ws.mset.data() + q, ws.mset.data() + q + 1,
                     static_cast<std::size_t>(msize - q - 1) * sizeof(int));
        break;
      }
    }
    --msize;
    std::memmove(ws.rebuilt.data() + position,
                 ws.rebuilt.data() + position - 1,
                 static_cast<std::size_t>(len - position + 1) * sizeof(int));
    ws.rebuilt[static_cast<std::size_t>(position - 1)] = letter;
    ++len;
    next_position = position;
  }
  if (kdes(ws.rebuilt.data(), len) != k) {
    if (why) *why = "inverse map produced the wrong descent count";
    return false;
  }
  return true;
}

// Weakly decreasing fixed-length sequences over [lo, hi].
struct Odometer {
  int* values;
  int len, lo, hi;
  bool exhausted;

  void reset(int* storage, int length, int low, int high) {
    values = storage;
    len = length;
    lo = low;
    hi = high;
    exhausted = len > 0 && lo > hi;
    for (int i = 0; i < len; ++i) values[i] = hi;
  }

  bool advance() {
    int p = len - 1;
    while (p >= 0 && values[p] == lo) --p;
    if (p < 0) return false;
    --values[p];
    for (int q = p + 1; q < len; ++q) values[q] = values[p];
    return true;
  }
};

void record_failure(FamilyTally& tally, std::uint64_t index, Theorem theorem,
                    std::string parameters, std::string lhs, std::string rhs,
                    int max_failures) {
  ++tally.failures;
  if (static_cast<int>(tally.reports.size()) < max_failures) {
    VerificationReport rep;
    rep.theorem = theorem;
    rep.parameters = std::move(parameters);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.pass = false;
    tally.reports.emplace_back(index, std::move(rep));
  }
}

QPoly histogram_poly(const std::uint32_t* row, int max_exp) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(max_exp) + 1);
  for (int e = 0; e <= max_exp; ++e) {
    coeffs.emplace_back(row[e]);
  }
  return QPoly::from_coefficients(std::move(coeffs));
}

// Compares a maj histogram row against shifted table coefficients.
bool histogram_matches(const std::uint32_t* row, int max_exp,
                       const std::vector<std::uint64_t>& rhs, int shift) {
  const int rhs_top = shift + static_cast<int>(rhs.size()) - 1;
  for (int e = 0; e <= std::max(max_exp, rhs_top); ++e) {
    const std::uint64_t lhs = e <= max_exp ? row[e] : 0;
    const std::uint64_t expected =
        (e >= shift && e - shift < static_cast<int>(rhs.size()))
            ? rhs[static_cast<std::size_t>(e - shift)]
            : 0;
    if (lhs != expected) return false;
  }
  return true;
}

void process_pair(const PairJob& job, std::uint64_t index, unsigned families,
                  const RhsTables& tables, Workspace& ws, ThreadTally& tally,
                  int max_failures) {
  const int total = job.total;
  const int m = job.m;
  const int n = job.n;
  const int max_maj = total * (total - 1) / 2;
  const int k_end = std::max(total - 1, 0);
  const bool trips = families & kFamRoundtrip;
  const bool nesting = families & kFamNovick;

  for (int k = 0; k <= k_end; ++k) {
    std::fill(ws.cnt[static_cast<std::size_t>(k)].begin(),
              ws.cnt[static_cast<std::size_t>(k)].begin() + max_maj + 1, 0u);
    ws.count_by_k[static_cast<std::size_t>(k)] = 0;
  }

  // enumerate shuffles: pi-position sets in lexicographic order
  for (int i = 0; i < n; ++i) ws.comb[static_cast<std::size_t>(i)] = i;
  std::string why;
  for (;;) {
    int pj = 0, si = 0;
    for (int slot = 0; slot < total; ++slot) {
      if (pj < n && ws.comb[static_cast<std::size_t>(pj)] == slot) {
        ws.buf[static_cast<std::size_t>(slot)] =
            job.pi[static_cast<std::size_t>(pj++)];
      } else {
        ws.buf[static_cast<std::size_t>(slot)] =
            job.sigma[static_cast<std::size_t>(si++)];
      }
    }
    ++tally.shuffles;
    const detail::WordStats stats = detail::word_stats(
        std::span<const int>(ws.buf.data(), static_cast<std::size_t>(total)));
    const int des = stats.des;
    ++ws.cnt[static_cast<std::size_t>(des)]
            [static_cast<std::size_t>(stats.maj)];
    ++ws.count_by_k[static_cast<std::size_t>(des)];

    if (trips || nesting) {
      int k = 0, lambda_len = 0, mu_len = 0;
      why.clear();
      const bool ok =
          kernel_decompose_phi(job, ws.buf.data(), ws, nesting, &k,
                               &lambda_len, &mu_len, &why);
      if (nesting) {
        ++tally.novick.checks;
        if (!ok) {
          record_failure(tally.novick, index, Theorem::novick_prefix,
                         job.describe() + " alpha=" +
                             ints_str(ws.buf.data(), total),
                         why, "nested prefix sets", max_failures);
        }
      }
      if (trips) {
        ++tally.roundtrip.checks;
        bool trip_ok = ok;
        if (ok) {
          trip_ok = kernel_psi(job, k, ws.lambda.data(), lambda_len,
                               ws.mu.data(), mu_len, ws, &why) &&
                    std::memcmp(ws.rebuilt.data(), ws.buf.data(),
                                static_cast<std::size_t>(total) *
                                    sizeof(int)) == 0;
          if (ok && !trip_ok && why.empty()) why = "psi(phi(alpha)) != alpha";
        }
        if (!trip_ok) {
          record_failure(tally.roundtrip, index, Theorem::bijection_roundtrip,
                         job.describe() + " alpha=" +
                             ints_str(ws.buf.data(), total),
                         why, "identity round trip", max_failures);
        }
      }
    }

    int i = n - 1;
    while (i >= 0 &&
           ws.comb[static_cast<std::size_t>(i)] == total - n + i) {
      --i;
    }
    if (i < 0) break;
    ++ws.comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      ws.comb[static_cast<std::size_t>(j)] =
          ws.comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  if (families & kFamStanley) {
    const int shift = job.maj_sigma + job.maj_pi;
    for (int k = 0; k <= k_end; ++k) {
      ++tally.stanley.checks;
      const auto& rhs =
          tables.stanley.at(stanley_key(m, n, job.r, job.s, k));
      if (!histogram_matches(ws.cnt[static_cast<std::size_t>(k)].data(),
                             max_maj, rhs, shift)) {
        const QPoly lhs_poly = histogram_poly(
            ws.cnt[static_cast<std::size_t>(k)].data(), max_maj);
        record_failure(
            tally.stanley, index, Theorem::stanley,
            job.describe() + " k=" + std::to_string(k), lhs_poly.str(),
            stanley_rhs(m, n, job.r, job.s, k, job.maj_sigma, job.maj_pi)
                .str(),
            max_failures);
      }
    }
  }

  if (families & kFamGarsia) {
    ++tally.gg.checks;
    std::array<std::uint32_t, kMaxMaj + 1> totals{};
    for (int k = 0; k <= k_end; ++k) {
      for (int e = 0; e <= max_maj; ++e) {
        totals[static_cast<std::size_t>(e)] +=
            ws.cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)];
      }
    }
    const auto& rhs = tables.gg.at(gg_key(total, m));
    if (!histogram_matches(totals.data(), max_maj, rhs,
                           job.maj_sigma + job.maj_pi)) {
      record_failure(tally.gg, index, Theorem::garsia_gessel, job.describe(),
                     histogram_poly(totals.data(), max_maj).str(),
                     garsia_gessel_rhs(m, n, job.maj_sigma, job.maj_pi).str(),
                     max_failures);
    }
  }

  if (trips) {
    // inverse direction: every admissible pair maps back to itself, and the
    // pair count per k matches the shuffle count per k
    std::string why2;
    for (int k = 0; k <= std::max(k_end, job.r + n); ++k) {
      const int lambda_len = k - job.r;
      const int mu_len = n - k + job.r;
      std::uint64_t pair_count = 0;
      if (lambda_len >= 0 && mu_len >= 0 &&
          !(mu_len > 0 && k - job.s < 0) &&
          !(lambda_len > 0 && k - job.s > m)) {
        Odometer lam;
        lam.reset(ws.odo_lambda.data(), lambda_len, std::max(k - job.s, 0),
                  m);
        if (!lam.exhausted) {
          do {
            Odometer mu;
            mu.reset(ws.odo_mu.data(), mu_len, 0, k - job.s);
            if (mu.exhausted) break;
            do {
              ++pair_count;
              ++tally.roundtrip.checks;
              why2.clear();
              bool ok = kernel_psi(job, k, ws.odo_lambda.data(), lambda_len,
                                   ws.odo_mu.data(), mu_len, ws, &why2);
              if (ok) {
                int k2 = 0, ll2 = 0, ml2 = 0;
                ok = kernel_decompose_phi(job, ws.rebuilt.data(), ws, false,
                                          &k2, &ll2, &ml2, &why2) &&
                     k2 == k && ll2 == lambda_len && ml2 == mu_len &&
                     std::memcmp(ws.lambda.data(), ws.odo_lambda.data(),
                                 static_cast<std::size_t>(lambda_len) *
                                     sizeof(int)) == 0 &&
                     std::memcmp(ws.mu.data(), ws.odo_mu.data(),
                                 static_cast<std::size_t>(mu_len) *
                                     sizeof(int)) == 0;
                if (!ok && why2.empty()) why2 = "phi(psi(pair)) != pair";
              }
              if (!ok) {
                record_failure(
                    tally.roundtrip, index, Theorem::bijection_roundtrip,
                    job.describe() + " k=" + std::to_string(k) + " lambda=" +
                        ints_str(ws.odo_lambda.data(), lambda_len) + " mu=" +
                        ints_str(ws.odo_mu.data(), mu_len),
                    why2, "identity round trip", max_failures);
                why2.clear();
              }
            } while (mu.advance());
          } while (lam.advance());
        }
      }
      ++tally.roundtrip.checks;
      const std::uint64_t shuffle_count =
          k <= k_end ? ws.count_by_k[static_cast<std::size_t>(k)] : 0;
      if (pair_count != shuffle_count) {
        record_failure(tally.roundtrip, index, Theorem::bijection_roundtrip,
                       job.describe() + " k=" + std::to_string(k) +
                           " |S_k| vs |pairs|",
                       count_str(shuffle_count), count_str(pair_count),
                       max_failures);
      }
    }
  }
}

struct EngineResult {
  SweepSummary stanley, gg, roundtrip, novick;
};

void fill_summary(SweepSummary& out, const std::vector<ThreadTally>& tallies,
                  FamilyTally ThreadTally::* member, int max_failures,
                  double elapsed) {
  std::vector<std::pair<std::uint64_t, VerificationReport>> merged;
  for (const auto& tally : tallies) {
    out.pairs += tally.pairs;
    out.shuffles += tally.shuffles;
    const FamilyTally& fam = tally.*member;
    out.checks += fam.checks;
    out.failure_count += fam.failures;
    merged.insert(merged.end(), fam.reports.begin(), fam.reports.end());
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const auto& a, const auto& b) {
                     return a.first < b.first;
                   });
  if (static_cast<int>(merged.size()) > max_failures) {
    merged.resize(static_cast<std::size_t>(max_failures));
  }
  for (auto& [idx, rep] : merged) {
    out.failures.push_back(std::move(rep));
  }
  out.elapsed_seconds = elapsed;
}

EngineResult run_engine(int min_total, int max_total, unsigned families,
                        int threads, int max_failures) {
  if (min_total < 0 || max_total < min_total) {
    throw std::invalid_argument("invalid sweep bounds");
  }
  if (max_total > kMaxSweepTotal) {
    throw std::invalid_argument("exhaustive sweep capped at m+n <= " +
                                std::to_string(kMaxSweepTotal));
  }
  const auto start = Clock::now();
  const RhsTables tables = build_tables(max_total, families);
  int nthreads = threads > 0
                     ? threads
                     : static_cast<int>(std::max(
                           1u, std::thread::hardware_concurrency()));

  std::vector<ThreadTally> tallies(static_cast<std::size_t>(nthreads));
  auto worker = [&](int tid) {
    Workspace ws;
    ThreadTally& tally = tallies[static_cast<std::size_t>(tid)];
    std::uint64_t index = 0;
    PairJob job;
    for (int total = min_total; total <= max_total; ++total) {
      job.total = total;
      for (int m = 0; m <= total; ++m) {
        const int n = total - m;
        job.m = m;
        job.n = n;
        // sigma letter subsets of {1..total} in lexicographic order
        std::array<int, kMaxLen> subset{};
        for (int i = 0; i < m; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
        for (;;) {
          std::array<int, kMaxLen> sigma_letters{};
          std::array<int, kMaxLen> pi_base{};
          {
            int pj = 0, si = 0;
            for (int v = 1; v <= total; ++v) {
              if (si < m && subset[static_cast<std::size_t>(si)] == v) {
                sigma_letters[static_cast<std::size_t>(si++)] = v;
              } else {
                pi_base[static_cast<std::size_t>(pj++)] = v;
              }
            }
          }
          do {  // sigma orderings
            std::array<int, kMaxLen> pi_letters = pi_base;
            do {  // pi orderings
              if (index++ % static_cast<std::uint64_t>(nthreads) ==
                  static_cast<std::uint64_t>(tid)) {
                job.sigma = sigma_letters;
                job.pi = pi_letters;
                job.r = kdes(job.sigma.data(), m);
                job.s = kdes(job.pi.data(), n);
                job.maj_sigma = kmaj(job.sigma.data(), m);
                job.maj_pi = kmaj(job.pi.data(), n);
                detail::tail_descent_table(
                    std::span<const int>(job.pi.data(),
                                         static_cast<std::size_t>(n)),
                    std::span<int>(job.pi_tails.data(),
                                   job.pi_tails.size()));
                ++tally.pairs;
                process_pair(job, index - 1, families, tables, ws, tally,
                             max_failures);
              }
            } while (std::next_permutation(pi_letters.begin(),
                                           pi_letters.begin() + n));
          } while (std::next_permutation(sigma_letters.begin(),
                                         sigma_letters.begin() + m));

          int i = m - 1;
          while (i >= 0 &&
                 subset[static_cast<std::size_t>(i)] == total - m + i + 1) {
            --i;
          }
          if (i < 0) break;
          ++subset[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < m; ++j) {
            subset[static_cast<std::size_t>(j)] =
                subset[static_cast<std::size_t>(j - 1)] + 1;
          }
        }
      }
    }
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  const double elapsed = seconds_since(start);
  EngineResult result;
  fill_summary(result.stanley, tallies, &ThreadTally::stanley, max_failures,
               elapsed);
  fill_summary(result.gg, tallies, &ThreadTally::gg, max_failures, elapsed);
  fill_summary(result.roundtrip, tallies, &ThreadTally::roundtrip,
               max_failures, elapsed);
  fill_summary(result.novick, tallies, &ThreadTally::novick, max_failures,
               elapsed);
  return result;
}

VerificationReport summary_report(Theorem theorem, int total,
                                  const SweepSummary& summary) {
  VerificationReport rep;
  rep.theorem = theorem;
  rep.parameters = "m+n=" + std::to_string(total) +
                   " exhaustive relative-order sweep: " +
                   count_str(summary.pairs) + " sigma/pi pairs, " +
                   count_str(summary.shuffles) + " shuffles";
  rep.lhs = count_str(summary.checks);
  rep.rhs = count_str(summary.checks - summary.failure_count);
  rep.pass = summary.failure_count == 0;
  rep.elapsed_seconds = summary.elapsed_seconds;
  return rep;
}

}  // namespace

SweepSummary sweep_stanley(const SweepOptions& options) {
  return run_engine(options.min_total, options.max_total, kFamStanley,
                    options.threads, options.max_failures)
      .stanley;
}

SweepSummary sweep_garsia_gessel(const SweepOptions& options) {
  return run_engine(options.min_total, options.max_total, kFamGarsia,
                    options.threads, options.max_failures)
      .gg;
}

SweepSummary sweep_roundtrip(const SweepOptions& options) {
  return run_engine(options.min_total, options.max_total, kFamRoundtrip,
                    options.threads, options.max_failures)
      .roundtrip;
}

SweepSummary sweep_novick_prefix(const SweepOptions& options) {
  return run_engine(options.min_total, options.max_total, kFamNovick,
                    options.threads, options.max_failures)
      .novick;
}

std::pair<SweepSummary, SweepSummary> sweep_bijection(
    const SweepOptions& options) {
  EngineResult er =
      run_engine(options.min_total, options.max_total,
                 kFamRoundtrip | kFamNovick, options.threads,
                 options.max_failures);
  return {std::move(er.roundtrip), std::move(er.novick)};
}

std::vector<VerificationReport> run_suite(int max_total_length,
                                          std::uint64_t seed, int threads) {
  if (max_total_length < 0 || max_total_length > kMaxSweepTotal) {
    throw std::invalid_argument("suite length must be in 0.." +
                                std::to_string(kMaxSweepTotal));
  }
  std::vector<VerificationReport> out;

  for (int total = 0; total <= max_total_length; ++total) {
    const unsigned families =
        kFamStanley | kFamGarsia | kFamRoundtrip | kFamNovick;
    EngineResult er = run_engine(total, total, families, threads, 50);
    const std::pair<Theorem, const SweepSummary*> parts[] = {
        {Theorem::stanley, &er.stanley},
        {Theorem::garsia_gessel, &er.gg},
        {Theorem::bijection_roundtrip, &er.roundtrip},
        {Theorem::novick_prefix, &er.novick},
    };
    for (const auto& [theorem, summary] : parts) {
      out.push_back(summary_report(theorem, total, *summary));
      for (const auto& failure : summary->failures) out.push_back(failure);
    }
  }

  // seeded random spot checks just above the exhaustive range
  std::mt19937_64 rng(seed);
  const int base = std::min(max_total_length, 9);
  for (int c = 0; c < 4; ++c) {
    const int total = base + 1 + c % 3;
    std::uniform_int_distribution<int> mdist(0, total);
    const int m = mdist(rng);
    std::vector<int> pool(static_cast<std::size_t>(3 * total));
    for (int i = 0; i < 3 * total; ++i) {
      pool[static_cast<std::size_t>(i)] = i + 1;
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    const Permutation sigma(
        std::vector<int>(pool.begin(), pool.begin() + m));
    const Permutation pi(
        std::vector<int>(pool.begin() + m, pool.begin() + total));
    const std::string instance =
        "spot sigma=" + sigma.str() + " pi=" + pi.str();

    const auto start = Clock::now();
    const auto stanley_reports = verify_stanley(sigma, pi);
    std::uint64_t stanley_pass = 0;
    for (const auto& rep : stanley_reports) {
      if (rep.pass) ++stanley_pass;
    }
    VerificationReport rep;
    rep.theorem = Theorem::stanley;
    rep.parameters = instance;
    rep.lhs = count_str(stanley_reports.size());
    rep.rhs = count_str(stanley_pass);
    rep.pass = stanley_pass == stanley_reports.size();
    rep.elapsed_seconds = seconds_since(start);
    out.push_back(rep);

    VerificationReport gg = verify_garsia_gessel(sigma, pi);
    gg.parameters = instance;
    out.push_back(std::move(gg));

    const auto trip_start = Clock::now();
    std::uint64_t trips = 0, trip_pass = 0, nests = 0, nest_pass = 0;
    for_each_shuffle(sigma, pi, [&](std::span<const int> letters) {
      const Permutation alpha = detail::make_permutation_unchecked(
          std::vector<int>(letters.begin(), letters.end()));
      const int k = detail::des_of(letters);
      ++trips;
      ++nests;
      try {
        const PartitionPair pair = phi(sigma, pi, alpha);
        if (psi(sigma, pi, k, pair) == alpha) ++trip_pass;
        t_sequence_check(decompose(sigma, pi, alpha));
        ++nest_pass;
      } catch (const std::logic_error&) {
      }
    });
    VerificationReport trip;
    trip.theorem = Theorem::bijection_roundtrip;
    trip.parameters = instance;
    trip.lhs = count_str(trips);
    trip.rhs = count_str(trip_pass);
    trip.pass = trips == trip_pass;
    trip.elapsed_seconds = seconds_since(trip_start);
    out.push_back(trip);

    VerificationReport nest;
    nest.theorem = Theorem::novick_prefix;
    nest.parameters = instance;
    nest.lhs = count_str(nests);
    nest.rhs = count_str(nest_pass);
    nest.pass = nests == nest_pass;
    nest.elapsed_seconds = seconds_since(trip_start);
    out.push_back(nest);
  }
  return out;
}

}  // namespace qshuffle
