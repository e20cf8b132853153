#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qshuffle/bijection.hpp"
#include "qshuffle/insertion.hpp"
#include "qshuffle/partitions.hpp"
#include "qshuffle/permutation.hpp"
#include "qshuffle/qpoly.hpp"
#include "qshuffle/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qshuffle;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '(' || c == ')') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) {
      throw std::invalid_argument("cannot parse integer list near '" +
                                  std::string(text.substr(i)) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

std::string tuple_str(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string multiset_str(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string pad(std::string s, std::size_t width, bool left_align = true) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left_align ? s + fill : fill + s;
}

// Renders a permutation with the letters of `marked` bracketed, matching
// the boldface in table output.
std::string marked_str(const Permutation& p, const std::set<int>& marked) {
  std::string out;
  for (int letter : p.letters()) {
    if (!out.empty()) out += ' ';
    if (marked.count(letter)) {
      out += '[' + std::to_string(letter) + ']';
    } else {
      out += std::to_string(letter);
    }
  }
  return out;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += " | ";
      line += pad(row[c], widths[c], c != 0);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << '\n';
  }
}

ordered_json perm_json(const Permutation& p) {
  return ordered_json(p.letters());
}

ordered_json poly_json(const QPoly& p) {
  return ordered_json(p.coefficient_strings());
}

void print_report_line(const VerificationReport& r) {
  std::printf("%s %-19s %s | lhs = %s | rhs = %s (%.3fs)\n",
              r.pass ? "PASS" : "FAIL",
              std::string(theorem_name(r.theorem)).c_str(),
              r.parameters.c_str(), r.lhs.c_str(), r.rhs.c_str(),
              r.elapsed_seconds);
}

int emit_reports(const std::vector<VerificationReport>& reports, bool json) {
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back(ordered_json::parse(report_to_json(r)));
    }
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& r : reports) print_report_line(r);
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
  }
  return all_pass ? kExitPass : kExitFail;
}

struct Options {
  bool json = false;
  bool trace = false;
  std::string perm, sigma, pi, alpha, lambda, mu;
  int k = -1;
  bool gf = false;
  int letter = -1;
  int n = 0;
  int cap = 8;
  int max_len = 9;
  std::uint64_t seed = 0;
  int threads = 0;
};

int run_stats(const Options& opt) {
  const Permutation p = Permutation::parse(opt.perm);
  const DescentProfile profile = descent_profile(p);
  if (opt.json) {
    ordered_json j;
    j["perm"] = perm_json(p);
    j["descent_set"] = profile.descent_set;
    j["des"] = profile.des;
    j["maj"] = profile.maj;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "perm:        " << p.str() << '\n';
    std::cout << "descent set: " << multiset_str(profile.descent_set) << '\n';
    std::cout << "des:         " << profile.des << '\n';
    std::cout << "maj:         " << profile.maj << '\n';
  }
  return kExitPass;
}

int run_shuffles(const Options& opt) {
  const Permutation sigma = Permutation::parse(opt.sigma);
  const Permutation pi = Permutation::parse(opt.pi);
  const int total = sigma.length() + pi.length();

  if (opt.gf) {
    const auto gfs = shuffle_gf_by_descents(sigma, pi);
    ordered_json gf_json;
    std::vector<std::pair<int, QPoly>> printed;
    for (int k = 0; k < static_cast<int>(gfs.size()); ++k) {
      if (opt.k >= 0 && k != opt.k) continue;
      if (opt.k < 0 && gfs[static_cast<std::size_t>(k)].is_zero()) continue;
      printed.emplace_back(k, gfs[static_cast<std::size_t>(k)]);
    }
    if (opt.json) {
      ordered_json j;
      j["sigma"] = perm_json(sigma);
      j["pi"] = perm_json(pi);
      for (const auto& [k, poly] : printed) {
        gf_json[std::to_string(k)] = poly_json(poly);
      }
      j["gf"] = gf_json;
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& [k, poly] : printed) {
        std::cout << "S_" << k << "(q) = " << poly.str() << '\n';
      }
    }
    return kExitPass;
  }

  std::vector<Permutation> selected;
  std::uint64_t count = 0;
  for_each_shuffle(sigma, pi, [&](std::span<const int> letters) {
    ++count;
    if (opt.k >= 0 && detail::des_of(letters) != opt.k) return;
    selected.push_back(detail::make_permutation_unchecked(
        std::vector<int>(letters.begin(), letters.end())));
  });
  if (opt.json) {
    ordered_json j;
    j["sigma"] = perm_json(sigma);
    j["pi"] = perm_json(pi);
    if (opt.k >= 0) j["k"] = opt.k;
    j["count"] = count;
    ordered_json list = ordered_json::array();
    for (const auto& s : selected) list.push_back(perm_json(s));
    j["shuffles"] = list;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& s : selected) std::cout << s.str() << '\n';
    std::cout << "count: " << selected.size();
    if (opt.k >= 0) std::cout << " of " << count << " with des=" << opt.k;
    std::cout << " (total " << total << " letters)" << '\n';
  }
  return kExitPass;
}

void print_phi_trace(const Permutation& sigma, const Permutation& pi,
                     const ShuffleDecomposition& d) {
  const std::set<int> marked(pi.letters().begin(), pi.letters().end());
  const int n = pi.length();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"i", "alpha^(i)", "d_i(pi)", "maj drop", "t(i)",
                  "des drop"});
  std::vector<int> tails;
  detail::tail_descent_table(pi.letters(), tails);
  for (int i = n; i >= 1; --i) {
    const int maj_drop =
        detail::maj_of(d.chain[static_cast<std::size_t>(i - 1)].letters()) -
        detail::maj_of(d.chain[static_cast<std::size_t>(i)].letters());
    const int des_drop = d.descent_drop_flags[static_cast<std::size_t>(i - 1)]
                             ? 1
                             : 0;
    rows.push_back(
        {std::to_string(i),
         marked_str(d.chain[static_cast<std::size_t>(i)], marked),
         std::to_string(tails[static_cast<std::size_t>(i)]),
         std::to_string(maj_drop),
         std::to_string(d.t_values[static_cast<std::size_t>(i - 1)]),
         std::to_string(des_drop)});
  }
  rows.push_back({"0", marked_str(d.chain[0], marked), "", "", "", ""});
  print_table(rows);
  (void)sigma;
}

int run_phi(const Options& opt) {
  const Permutation sigma = Permutation::parse(opt.sigma);
  const Permutation pi = Permutation::parse(opt.pi);
  const Permutation alpha = Permutation::parse(opt.alpha);
  const PartitionPair pair = phi(sigma, pi, alpha);
  const int k = descent_profile(alpha).des;
  if (opt.trace && !opt.json) {
    print_phi_trace(sigma, pi, decompose(sigma, pi, alpha));
  }
  if (opt.json) {
    ordered_json j;
    j["lambda"] = pair.lambda;
    j["mu"] = pair.mu;
    j["k"] = k;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "lambda = " << tuple_str(pair.lambda) << '\n';
    std::cout << "mu     = " << tuple_str(pair.mu) << '\n';
    std::cout << "k      = " << k << '\n';
  }
  return kExitPass;
}

void print_psi_trace(const Permutation& pi, const PsiTrace& trace) {
  const std::set<int> marked(pi.letters().begin(), pi.letters().end());
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"i", "pi_i", "T^(i)", "M^(i)", "k_i", "alpha^(i)"});
  for (const auto& step : trace.steps) {
    std::string row_str = "(";
    for (std::size_t j = 0; j < step.t_row.size(); ++j) {
      if (j > 0) row_str += ", ";
      const std::string v = std::to_string(step.t_row[j]);
      row_str += static_cast<int>(j) == step.position - 1 ? "[" + v + "]" : v;
    }
    row_str += ")";
    rows.push_back({std::to_string(step.index), std::to_string(step.letter),
                    row_str, multiset_str(step.multiset),
                    std::to_string(step.position),
                    marked_str(step.before, marked)});
  }
  rows.push_back({"0", "", "", "{}", "", marked_str(trace.alpha, marked)});
  print_table(rows);
}

int run_psi(const Options& opt) {
  const Permutation sigma = Permutation::parse(opt.sigma);
  const Permutation pi = Permutation::parse(opt.pi);
  PartitionPair pair;
  pair.lambda = parse_int_list(opt.lambda);
  pair.mu = parse_int_list(opt.mu);
  const PsiTrace trace = psi_trace(sigma, pi, opt.k, pair);
  if (opt.trace && !opt.json) print_psi_trace(pi, trace);
  std::vector<int> positions;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    positions.push_back(it->position);
  }
  if (opt.json) {
    ordered_json j;
    j["alpha"] = perm_json(trace.alpha);
    j["insertion_positions"] = positions;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "alpha = " << trace.alpha.str() << '\n';
    std::cout << "insertion positions k = " << tuple_str(positions) << '\n';
  }
  return kExitPass;
}

int run_labeling(const Options& opt) {
  const Permutation p = Permutation::parse(opt.perm);
  const CanonicalLabeling labeling = canonical_labeling(p, opt.letter);
  if (opt.json) {
    ordered_json j;
    j["perm"] = perm_json(p);
    j["letter"] = opt.letter;
    ordered_json kinds = ordered_json::array();
    for (SpaceKind kind : labeling.kinds) {
      kinds.push_back(kind == SpaceKind::RL ? "RL" : "LR");
    }
    j["kinds"] = kinds;
    j["labels"] = labeling.labels;
    j["rl_count"] = labeling.rl_count;
    std::cout << j.dump() << '\n';
    return kExitPass;
  }
  std::vector<int> rl_spaces, lr_spaces;
  for (int i = 0; i <= p.length(); ++i) {
    if (labeling.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL) {
      rl_spaces.push_back(i);
    } else {
      lr_spaces.push_back(i);
    }
  }
  // label before each letter, [a] at RL-spaces and (a) at LR-spaces
  std::string line;
  for (int i = 0; i <= p.length(); ++i) {
    if (i > 0) line += ' ';
    const std::string label =
        std::to_string(labeling.labels[static_cast<std::size_t>(i)]);
    line += labeling.kinds[static_cast<std::size_t>(i)] == SpaceKind::RL
                ? "[" + label + "]"
                : "(" + label + ")";
    if (i < p.length()) {
      line += std::to_string(p.letters()[static_cast<std::size_t>(i)]);
    }
  }
  std::cout << "perm:     " << p.str() << '\n';
  std::cout << "letter:   " << opt.letter << '\n';
  std::cout << "rl_count: " << labeling.rl_count << '\n';
  std::cout << "spaces:   RL " << multiset_str(rl_spaces) << "  LR "
            << multiset_str(lr_spaces) << '\n';
  std::cout << "labeling: " << line << '\n';
  return kExitPass;
}

int run_mis(const Options& opt) {
  const Permutation p = Permutation::parse(opt.perm);
  const MISSequence sequence = mis(p, opt.letter);
  if (opt.trace && !opt.json) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"i", "inserted", "maj", "im", "des change"});
    const int des_base = descent_profile(p).des;
    const int maj_base = descent_profile(p).maj;
    const std::set<int> marked = {opt.letter};
    for (int i = 0; i <= p.length(); ++i) {
      const Permutation inserted = insert_at(p, i, opt.letter);
      const DescentProfile profile = descent_profile(inserted);
      rows.push_back({std::to_string(i), marked_str(inserted, marked),
                      std::to_string(profile.maj),
                      std::to_string(profile.maj - maj_base),
                      std::to_string(profile.des - des_base)});
    }
    print_table(rows);
  }
  if (opt.json) {
    ordered_json j;
    j["perm"] = perm_json(p);
    j["letter"] = opt.letter;
    j["mis"] = sequence.increments;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "MIS(" << p.str() << ", " << opt.letter
              << ") = " << tuple_str(sequence.increments) << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact permutation-shuffle statistics and identity checks"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_flag("--trace", opt.trace, "step-by-step tables (text mode)");

  auto add_common = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  auto* stats = add_common(app.add_subcommand(
      "stats", "descent set, descent count and major index"));
  stats->add_option("--perm", opt.perm, "permutation letters")->required();

  auto* shuffles = add_common(app.add_subcommand(
      "shuffles", "enumerate shuffles of two disjoint permutations"));
  shuffles->add_option("--sigma", opt.sigma)->required();
  shuffles->add_option("--pi", opt.pi)->required();
  shuffles->add_option("--k", opt.k, "keep only shuffles with des = k")
      ->check(CLI::NonNegativeNumber);
  shuffles->add_flag("--gf", opt.gf,
                     "print generating functions instead of listings");

  auto* phi_cmd = add_common(app.add_subcommand(
      "phi", "map a shuffle to its partition pair (lambda, mu)"));
  phi_cmd->add_option("--sigma", opt.sigma)->required();
  phi_cmd->add_option("--pi", opt.pi)->required();
  phi_cmd->add_option("--alpha", opt.alpha)->required();

  auto* psi_cmd = add_common(app.add_subcommand(
      "psi", "rebuild the shuffle from a partition pair"));
  psi_cmd->add_option("--sigma", opt.sigma)->required();
  psi_cmd->add_option("--pi", opt.pi)->required();
  psi_cmd->add_option("--k", opt.k, "descent count of the shuffle")
      ->required();
  psi_cmd->add_option("--lambda", opt.lambda, "lambda parts, e.g. \"6 4 3\"");
  psi_cmd->add_option("--mu", opt.mu, "mu parts, zeros allowed");

  auto* labeling_cmd = add_common(app.add_subcommand(
      "labeling", "canonical RL/LR labeling of insertion spaces"));
  labeling_cmd->add_option("--perm", opt.perm)->required();
  labeling_cmd->add_option("--letter", opt.letter, "letter to insert")
      ->required();

  auto* mis_cmd = add_common(
      app.add_subcommand("mis", "major increment sequence"));
  mis_cmd->add_option("--perm", opt.perm)->required();
  mis_cmd->add_option("--letter", opt.letter, "letter to insert")->required();

  auto* verify = add_common(app.add_subcommand(
      "verify", "check the identities by exhaustive enumeration"));
  verify->require_subcommand(1);
  auto* v_stanley = add_common(verify->add_subcommand(
      "stanley", "per-descent-count generating function identity"));
  v_stanley->add_option("--sigma", opt.sigma)->required();
  v_stanley->add_option("--pi", opt.pi)->required();
  auto* v_gg = add_common(verify->add_subcommand(
      "garsia-gessel", "all-shuffles generating function identity"));
  v_gg->add_option("--sigma", opt.sigma)->required();
  v_gg->add_option("--pi", opt.pi)->required();
  auto* v_mac = add_common(verify->add_subcommand(
      "macmahon", "sum of q^maj over S_n equals [n]_q!"));
  v_mac->add_option("--n", opt.n)->required();
  v_mac->add_option("--cap", opt.cap, "largest allowed n (default 8)");
  auto* v_ins = add_common(verify->add_subcommand(
      "insertion", "insertion relation and canonical labeling"));
  v_ins->add_option("--perm", opt.perm)->required();
  v_ins->add_option("--letter", opt.letter)->required();
  auto* v_suite = add_common(verify->add_subcommand(
      "suite", "exhaustive sweep plus seeded spot checks"));
  v_suite->add_option("--max-len", opt.max_len,
                      "exhaustive bound on m+n (default 9)");
  v_suite->add_option("--seed", opt.seed, "spot-check seed");
  v_suite->add_option("--threads", opt.threads,
                      "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(stats)) return run_stats(opt);
    if (app.got_subcommand(shuffles)) return run_shuffles(opt);
    if (app.got_subcommand(phi_cmd)) return run_phi(opt);
    if (app.got_subcommand(psi_cmd)) return run_psi(opt);
    if (app.got_subcommand(labeling_cmd)) return run_labeling(opt);
    if (app.got_subcommand(mis_cmd)) return run_mis(opt);
    if (app.got_subcommand(verify)) {
      if (verify->got_subcommand(v_stanley)) {
        return emit_reports(verify_stanley(Permutation::parse(opt.sigma),
                                           Permutation::parse(opt.pi)),
                            opt.json);
      }
      if (verify->got_subcommand(v_gg)) {
        return emit_reports({verify_garsia_gessel(Permutation::parse(opt.sigma),
                                                  Permutation::parse(opt.pi))},
                            opt.json);
      }
      if (verify->got_subcommand(v_mac)) {
        return emit_reports({verify_macmahon(opt.n, opt.cap)}, opt.json);
      }
      if (verify->got_subcommand(v_ins)) {
        return emit_reports(
            {verify_insertion_lemma(Permutation::parse(opt.perm), opt.letter)},
            opt.json);
      }
      if (verify->got_subcommand(v_suite)) {
        return emit_reports(run_suite(opt.max_len, opt.seed, opt.threads),
                            opt.json);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
