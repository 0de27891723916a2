/*
 * Copyright 2026 The rankprop Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rankprop/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "rankprop/distribution.hpp"
#include "rankprop/errors.hpp"
#include "rankprop/io.hpp"
#include "rankprop/kernels.hpp"
#include "rankprop/preorder.hpp"
#include "rankprop/propriety.hpp"
#include "rankprop/sequential.hpp"
#include "rankprop/theoretical.hpp"

namespace rankprop {
namespace {

struct Options {
  std::string kernel = "auc";
  std::string degenerate = "1/2";
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string input;
  std::string output;
  std::string preorder;
  std::optional<std::size_t> known_positives;
  std::vector<std::string> search;
  bool brute_force = false;
  bool decimal = false;
  std::size_t length = 10;
};

std::string exact_and_decimal(const Rational& v) {
  return to_string(v) + " (" + to_decimal(v, 10) + ")";
}

std::string vector_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string rank_text(const RankVector& rho) {
  std::string out = "(";
  for (std::size_t i = 0; i < rho.size(); ++i) out += (i ? "," : "") + std::to_string(rho[i]);
  return out + ")";
}

Submission load_submission(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return parse_submission_csv(in);
}

// Collects PASS/FAIL lines for the reproduce command.
class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void check(const std::string& what, const std::string& expected, const std::string& computed,
             bool pass) {
    out_ << (pass ? "PASS  " : "FAIL  ") << what << ": expected " << expected << ", computed "
         << computed << "\n";
    all_pass_ = all_pass_ && pass;
  }
  void exact(const std::string& what, const std::string& expected, const std::string& computed) {
    check(what, expected, computed, expected == computed);
  }
  // Compares as rationals, so "33/48" matches the canonical 11/16.
  void rational(const std::string& what, const std::string& expected, const Rational& computed) {
    check(what, expected, to_string(computed), parse_rational(expected) == computed);
  }
  bool all_pass() const { return all_pass_; }

 private:
  std::ostream& out_;
  bool all_pass_ = true;
};

int cmd_score(const Options& opt, std::ostream& out, std::ostream& err) {
  const Submission sub = load_submission(opt.input);
  const Rational degenerate = parse_rational(opt.degenerate);
  const OutcomeVector& y = sub.outcomes;
  if (opt.known_positives && *opt.known_positives != y.n1()) {
    err << "validation error: --known-positives " << *opt.known_positives << " but the file has "
        << y.n1() << " positive outcomes\n";
    return kExitUsage;
  }
  const TotalPreorder ranking = induce_preorder(std::span<const Rational>(sub.predictions));
  const Rational u = wmw_u(y, ranking);
  const Rational a = auc(y, ranking, degenerate);
  const Rational g = gini(y, ranking, degenerate);
  if (opt.format == "json") {
    Json report = {{"n", y.size()},      {"positives", y.n1()},
                   {"u", to_string(u)},  {"auc", to_string(a)},
                   {"gini", to_string(g)}, {"degenerate", y.is_degenerate()}};
    if (opt.known_positives) report["known_positives"] = *opt.known_positives;
    out << report.dump(2) << "\n";
  } else {
    out << "rows: " << y.size() << " (positives " << y.n1() << ", negatives " << y.n0() << ")\n";
    out << "u: " << exact_and_decimal(u) << "\n";
    out << "auc: " << exact_and_decimal(a) << "\n";
    out << "gini: " << exact_and_decimal(g) << "\n";
    if (opt.known_positives) {
      out << "note: positive count fixed in advance at " << *opt.known_positives
          << "; with a known count, AUC rewards honest ranking by marginal probability\n";
    }
  }
  if (y.is_degenerate()) {
    err << "warning: all outcomes are equal; AUC is the convention value "
        << to_string(degenerate) << "\n";
  }
  return kExitClean;
}

int cmd_roc(const Options& opt, std::ostream& out, std::ostream& err) {
  const Submission sub = load_submission(opt.input);
  if (sub.outcomes.is_degenerate()) {
    err << "error: ROC curve is undefined when all outcomes are equal (AUC convention value "
        << opt.degenerate << ")\n";
    return kExitUsage;
  }
  const TotalPreorder ranking = induce_preorder(std::span<const Rational>(sub.predictions));
  const std::string csv = roc_curve(sub.outcomes, ranking).to_csv(opt.decimal);
  if (opt.output.empty()) {
    out << csv;
  } else {
    std::ofstream file(opt.output);
    if (!file) throw InvalidInput("cannot write '" + opt.output + "'");
    file << csv;
  }
  return kExitClean;
}

int cmd_expected(const Options& opt, std::ostream& out, std::ostream& /*err*/) {
  const JointDistribution dist = to_joint(distribution_from_json(read_json_file(opt.input)));
  const ScoreKernel kernel = kernel_by_name(opt.kernel, parse_rational(opt.degenerate));
  const TotalPreorder preorder = TotalPreorder::parse(opt.preorder);
  const Rational value = expected_score(dist, kernel, preorder);
  if (opt.format == "json") {
    out << Json{{"kernel", kernel.name},
                {"preorder", preorder.to_string()},
                {"expected", to_string(value)},
                {"decimal", to_decimal(value, 17)}}
               .dump(2)
        << "\n";
  } else {
    out << to_string(value) << "\n" << to_decimal(value, 17) << "\n";
  }
  return kExitClean;
}

int cmd_propriety(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.search.empty()) {
    if (opt.search.size() != 4) {
      err << "error: --search takes KERNEL N BUDGET SEED\n";
      return kExitUsage;
    }
    const ScoreKernel kernel = kernel_by_name(opt.search[0], parse_rational(opt.degenerate));
    SearchOptions search;
    search.n = std::stoul(opt.search[1]);
    search.budget = std::stoul(opt.search[2]);
    search.seed = std::stoull(opt.search[3]);
    search.jobs = opt.jobs;
    search.cap = opt.cap;
    const auto certs = search_counterexamples(kernel, search);
    if (opt.format == "text") {
      out << "improper certificates: " << certs.size() << "\n";
      for (const auto& c : certs) {
        out << c.witness->to_string() << " scores " << to_string(*c.witness_score) << ", beaten by "
            << c.beating->to_string() << " at " << to_string(*c.beating_score) << "\n";
      }
    } else {
      Json list = Json::array();
      for (const auto& c : certs) list.push_back(certificate_to_json(c));
      out << list.dump(2) << "\n";
    }
    return certs.empty() ? kExitClean : kExitImproper;
  }
  if (opt.input.empty()) {
    err << "error: propriety needs a distribution file or --search\n";
    return kExitUsage;
  }
  const JointDistribution dist = to_joint(distribution_from_json(read_json_file(opt.input)));
  const ScoreKernel kernel = kernel_by_name(opt.kernel, parse_rational(opt.degenerate));
  const ProprietyCertificate cert = check_propriety(dist, kernel);
  Json report = certificate_to_json(cert);
  if (opt.brute_force) {
    const BruteForceResult brute = brute_force_propriety(dist, kernel, opt.cap);
    report["brute_force"] = {{"verdict", std::string(verdict_name(brute.verdict))},
                             {"max_score", to_string(brute.max_score)},
                             {"maximizers", brute.maximizers.size()}};
  }
  if (opt.format == "text") {
    out << "verdict: " << verdict_name(cert.verdict) << "\n";
    out << "exact rank: " << cert.exact_rank.to_string() << "\n";
    out << "sigma rank: " << cert.sigma_rank.to_string() << "\n";
    if (cert.witness) {
      out << "witness " << cert.witness->to_string() << " scores " << to_string(*cert.witness_score)
          << "; " << cert.beating->to_string() << " scores " << to_string(*cert.beating_score)
          << "\n";
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return cert.verdict == Verdict::kProperHere ? kExitClean : kExitImproper;
}

JointDistribution four_item_counterexample() {
  return JointDistribution::from_atoms(
      4, {{OutcomeVector({1, 1, 0, 0}), ratio(1, 2)},
          {OutcomeVector({0, 0, 1, 0}), ratio(7, 16)},
          {OutcomeVector({0, 0, 0, 1}), ratio(1, 16)}});
}

GroupedMixtureSpec two_model_grouped_spec(std::size_t feature_size, std::size_t other_size) {
  return GroupedMixtureSpec({{feature_size, "U"}, {other_size, "not U"}},
                            {{ratio(1, 2), {ratio(2, 5), ratio(1, 2)}},
                             {ratio(1, 2), {ratio(19, 20), ratio(9, 10)}}});
}

void reproduce_example3(Checklist& checks) {
  const JointDistribution dist = four_item_counterexample();
  const ScoreKernel kernel = auc_kernel();
  RationalVector expected_alpha = expected_sigma(dist, kernel);
  for (auto& v : expected_alpha) v *= 2;
  const TotalPreorder by_marginals = exact_rank(dist);
  const TotalPreorder by_alpha = induce_preorder(std::span<const Rational>(expected_alpha));
  checks.exact("E[Y]", "(1/2,1/2,7/16,1/16)", vector_text(marginal_functional(dist)));
  checks.exact("E[alpha(Y)]", "(1/8,1/8,7/48,1/48)", vector_text(expected_alpha));
  checks.exact("marginal ranking", "[4][3][1,2]", by_marginals.to_string());
  checks.exact("alpha ranking", "[4][1,2][3]", by_alpha.to_string());
  checks.exact("rank vector, marginal ranking", "(2,2,-1,-3)", rank_text(rank_vector(by_marginals)));
  checks.exact("rank vector, alpha ranking", "(0,0,3,-3)", rank_text(rank_vector(by_alpha)));
  checks.rational("E[auc], marginal ranking", "31/48", expected_score(dist, kernel, by_marginals));
  checks.rational("E[auc], alpha ranking", "33/48", expected_score(dist, kernel, by_alpha));
  checks.exact("auc verdict", "improper", std::string(verdict_name(check_propriety(dist, kernel).verdict)));
}

void reproduce_example5(Checklist& checks) {
  const GroupedMixtureSpec spec = two_model_grouped_spec(10, 90);
  const RationalVector marginals = spec.group_marginals();
  checks.exact("marginal with feature", "27/40", to_string(marginals[0]));
  checks.exact("marginal without feature", "7/10", to_string(marginals[1]));
  const TotalPreorder induced = induce_preorder(std::span<const Rational>(marginals));
  const Rational honest = expected_auc_grouped(spec, induced);
  const Rational opposite = expected_auc_grouped(spec, induced.reversed());
  constexpr double kTolerance = 5e-4;
  checks.check("E[auc], induced ranking", "0.496", to_decimal(honest, 6),
               std::fabs(to_double(honest) - 0.496) <= kTolerance);
  checks.check("E[auc], opposite ranking", "0.504", to_decimal(opposite, 6),
               std::fabs(to_double(opposite) - 0.504) <= kTolerance);

  const GroupedMixtureSpec small = two_model_grouped_spec(2, 4);
  const TotalPreorder small_order = induce_preorder(std::span<const Rational>(small.group_marginals()));
  const Rational oracle = expected_auc_grouped(small, small_order);
  const Rational brute =
      expected_score(small.to_mixture().expand(), auc_kernel(), small.lift(small_order));
  checks.exact("count oracle vs enumeration (2+4 individuals)", to_string(brute), to_string(oracle));
}

void reproduce_theorem2(Checklist& checks) {
  const PairModel theta({{"1", 1, ratio(3, 10)},
                         {"1", 0, ratio(1, 10)},
                         {"0", 1, ratio(2, 10)},
                         {"0", 0, ratio(4, 10)}});
  const ScalarMap identity({{"0", Rational(0)}, {"1", Rational(1)}});
  checks.exact("theoretical auc", "7/10", to_string(theoretical_auc(theta, identity)));
  for (std::size_t n = 2; n <= 4; ++n) {
    const ExpectedAucIdentity id = verify_expected_auc_identity(theta, identity, n);
    checks.exact("expected empirical auc, n=" + std::to_string(n), to_string(id.rhs),
                 to_string(id.lhs));
  }
}

void reproduce_sequential(Checklist& checks, std::ostream& out, std::uint64_t seed,
                          std::size_t length) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> bits(length);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  const OutcomeVector outcomes = OutcomeVector::from_ints(bits);
  const SequenceRun run = run_sequence(outcomes);
  out << "outcomes " << outcomes.to_string() << "\n";
  for (std::size_t t = 0; t < run.steps.size(); ++t) {
    out << "  step " << (t + 1) << ": " << run.steps[t].to_string() << "\n";
  }
  const std::string expected = outcomes.is_degenerate() ? "1/2" : "1";
  checks.exact("final auc", expected, to_string(run.final_auc));
}

int cmd_reproduce(const Options& opt, std::ostream& out, std::ostream& err) {
  Checklist checks(out);
  if (opt.input == "example3") {
    reproduce_example3(checks);
  } else if (opt.input == "example5") {
    reproduce_example5(checks);
  } else if (opt.input == "theorem2") {
    reproduce_theorem2(checks);
  } else if (opt.input == "sequential") {
    reproduce_sequential(checks, out, opt.seed, opt.length);
  } else {
    err << "error: unknown example '" << opt.input
        << "' (expected example3, example5, theorem2 or sequential)\n";
    return kExitUsage;
  }
  out << (checks.all_pass() ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
  return checks.all_pass() ? kExitClean : kExitImproper;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--kernel", opt.kernel, "Scoring kernel")->check(CLI::IsMember({"u", "auc", "gini"}));
  cmd->add_option("--degenerate-constant", opt.degenerate,
                  "AUC assigned to all-0/all-1 outcomes, as a/b");
  cmd->add_option("--cap", opt.cap, "Largest n for preorder enumeration");
  cmd->add_option("--jobs", opt.jobs, "Worker threads for searches");
  cmd->add_option("--seed", opt.seed, "Random seed");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact rank-sum scoring (u, AUC, Gini) and propriety checks"};
  app.require_subcommand(1);

  auto* score = app.add_subcommand("score", "Score a submission CSV (id,prediction,outcome)");
  score->add_option("file", opt.input, "Submission CSV")->required();
  score->add_option("--known-positives", opt.known_positives, "Expected number of positives");
  add_common(score, opt);

  auto* roc = app.add_subcommand("roc", "Write the empirical ROC curve of a submission as CSV");
  roc->add_option("file", opt.input, "Submission CSV")->required();
  roc->add_option("-o,--output", opt.output, "Output CSV path (default: stdout)");
  roc->add_flag("--decimal", opt.decimal, "Render coordinates as decimals");
  add_common(roc, opt);

  auto* expected = app.add_subcommand("expected", "Expected score of a preorder under a distribution");
  expected->add_option("file", opt.input, "Distribution JSON")->required();
  expected->add_option("preorder", opt.preorder, "Preorder such as [4][3][1,2]")->required();
  add_common(expected, opt);

  auto* propriety = app.add_subcommand("propriety", "Check propriety or search for counterexamples");
  propriety->add_option("file", opt.input, "Distribution JSON");
  propriety->add_option("--search", opt.search, "KERNEL N BUDGET SEED")->expected(4);
  propriety->add_flag("--brute-force", opt.brute_force, "Cross-check by enumerating all preorders");
  add_common(propriety, opt);

  auto* reproduce = app.add_subcommand("reproduce", "Recompute a worked example with PASS/FAIL lines");
  reproduce->add_option("example", opt.input, "example3, example5, theorem2 or sequential")->required();
  reproduce->add_option("--length", opt.length, "Sequence length for the sequential demo");
  add_common(reproduce, opt);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  bool format_given = false;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto* cmd : {score, roc, expected, propriety, reproduce}) {
      if (cmd->parsed() && cmd->count("--format") > 0) format_given = true;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (propriety->parsed() && !format_given) opt.format = "json";

  try {
    if (score->parsed()) return cmd_score(opt, out, err);
    if (roc->parsed()) return cmd_roc(opt, out, err);
    if (expected->parsed()) return cmd_expected(opt, out, err);
    if (propriety->parsed()) return cmd_propriety(opt, out, err);
    if (reproduce->parsed()) return cmd_reproduce(opt, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
  } catch (const PreconditionViolation& e) {
    err << "precondition violated: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace rankprop
