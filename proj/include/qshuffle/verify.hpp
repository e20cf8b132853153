#ifndef QSHUFFLE_VERIFY_HPP
#define QSHUFFLE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/permutation.hpp"

namespace qshuffle {

enum class Theorem {
  stanley,
  garsia_gessel,
  macmahon,
  insertion_lemma,
  bijection_roundtrip,
  novick_prefix,
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);

/// One verified identity instance. lhs and rhs are rendered polynomials or
/// decimal counts; pass holds iff they are identical.
struct VerificationReport {
  Theorem theorem = Theorem::stanley;
  std::string parameters;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

/// Equality up to timing.
bool equivalent(const VerificationReport& a, const VerificationReport& b);

/// Serialized object key order is fixed, so parse + re-serialize is
/// byte-identical.
std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(std::string_view text);

/// One report per descent count k: enumeration of S_{k,q} against the
/// closed form. k runs 0..m+n-1 (a single k = 0 report when m+n = 0).
std::vector<VerificationReport> verify_stanley(const Permutation& sigma,
                                               const Permutation& pi);

/// Sum over all shuffles of q^maj against [n+m, m]_q q^{maj sums}.
VerificationReport verify_garsia_gessel(const Permutation& sigma,
                                        const Permutation& pi);

/// Sum of q^maj over S_n (letters 1..n) against [n]_q!. n above the cap is
/// an input error.
VerificationReport verify_macmahon(int n, int cap = 8);

/// Insertion relation at every space of sigma relative to letter: the
/// inserted-maj generating function equals [n+1]_q q^{maj(sigma)}, every
/// canonical label equals the rescanned major increment, the descent change
/// matches the space kind, and rl_count = des(sigma) + 1.
VerificationReport verify_insertion_lemma(const Permutation& sigma,
                                          int letter);

/// sum_k [n k][m h-k] q^{(n-k)(h-k)} = [m+n h] for all n, m <= max_mn and
/// h <= n+m, plus the equivalent sum of stanley_rhs over k against
/// garsia_gessel_rhs for all descent counts r, s.
VerificationReport verify_q_chu_vandermonde(int max_mn = 6);

// --- exhaustive sweeps over all relative-order classes ---
//
// Instances are all pairs of sequences partitioning {1..N} for N in
// [min_total, max_total], covering every relative-order class of disjoint
// (sigma, pi) with m+n = N.

struct SweepOptions {
  int min_total = 0;
  int max_total = 9;
  int threads = 0;        // <= 0 picks hardware concurrency
  int max_failures = 50;  // reports kept; the count is always exact
};

struct SweepSummary {
  std::uint64_t pairs = 0;     // (sigma, pi) instances
  std::uint64_t shuffles = 0;  // shuffle instances enumerated
  std::uint64_t checks = 0;    // individual comparisons performed
  std::uint64_t failure_count = 0;
  std::vector<VerificationReport> failures;
  double elapsed_seconds = 0.0;

  bool all_pass() const { return failure_count == 0; }
};

/// Per-k enumeration vs closed form for every instance.
SweepSummary sweep_stanley(const SweepOptions& options);

/// Whole generating function vs closed form for every instance.
SweepSummary sweep_garsia_gessel(const SweepOptions& options);

/// Both round-trip directions, the weight law, membership, monotone
/// insertion positions, and the per-k counting identity for every instance.
SweepSummary sweep_roundtrip(const SweepOptions& options);

/// Prefix-set nesting and extremality for every decomposed shuffle.
SweepSummary sweep_novick_prefix(const SweepOptions& options);

/// Round-trip and prefix-nesting families in a single pass; first element
/// is the round-trip summary, second the nesting summary.
std::pair<SweepSummary, SweepSummary> sweep_bijection(
    const SweepOptions& options);

/// Exhaustive verification of all four families for m+n <= max_total_length
/// plus seeded random larger spot checks. Reports are emitted in a
/// deterministic order given the seed.
std::vector<VerificationReport> run_suite(int max_total_length,
                                          std::uint64_t seed,
                                          int threads = 0);

}  // namespace qshuffle

#endif  // QSHUFFLE_VERIFY_HPP
