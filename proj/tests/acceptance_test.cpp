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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rankprop/distribution.hpp"
#include "rankprop/kernels.hpp"
#include "rankprop/mapping.hpp"
#include "rankprop/propriety.hpp"
#include "rankprop/sequential.hpp"
#include "rankprop/theoretical.hpp"
#include "test_support.hpp"

namespace {

using namespace rankprop;
using rankprop::testing::rv;

// Collects failed sub-checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_ > 0) {
      s << ", " << failed_ << " failed";
      for (const auto& f : failures_) s << "; " << f;
    }
    return s.str();
  }
  std::string note;

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

TotalPreorder P(const char* text) { return TotalPreorder::parse(text); }

std::vector<std::int64_t> rho(const TotalPreorder& p) {
  const RankVector r = rank_vector(p);
  return {r.begin(), r.end()};
}

// Expected score of the u or auc kernel by pair counting over the support.
Rational pair_expected(bool use_auc, const JointDistribution& d, const TotalPreorder& p) {
  Rational total;
  for (const auto& atom : d.support()) {
    Rational u = rankprop::testing::wmw_u_pairs(atom.y, p);
    if (use_auc) u = atom.y.is_degenerate() ? ratio(1, 2) : u / Rational(atom.y.n0() * atom.y.n1());
    total += atom.p * u;
  }
  return total;
}

std::set<TotalPreorder> argmax_by_scan(bool use_auc, const JointDistribution& d) {
  Rational best;
  std::set<TotalPreorder> argmax;
  bool first = true;
  for (const auto& p : rankprop::testing::all_preorders_by_scan(d.size())) {
    const Rational s = pair_expected(use_auc, d, p);
    if (first || s > best) {
      best = s;
      argmax = {p};
      first = false;
    } else if (s == best) {
      argmax.insert(p);
    }
  }
  return argmax;
}

std::set<TotalPreorder> as_set(const PreorderRange& range) {
  const auto v = range.to_vector();
  return {v.begin(), v.end()};
}

GroupedMixtureSpec two_model_grouped(std::size_t feature, std::size_t other) {
  return GroupedMixtureSpec({{feature, "feature"}, {other, "other"}},
                            {{ratio(1, 2), rv({"0.4", "0.5"})}, {ratio(1, 2), rv({"0.95", "0.9"})}});
}

void criterion1(Check& c) {
  const auto d = rankprop::testing::four_item_counterexample();
  const auto k = auc_kernel();
  c.expect(expected_score(d, k, P("[4][3][1,2]")) == ratio(31, 48), "E[auc] at exact rank");
  c.expect(expected_score(d, k, P("[4][1,2][3]")) == ratio(33, 48), "E[auc] at alpha rank");
  c.expect(pair_expected(true, d, P("[4][3][1,2]")) == ratio(31, 48), "pair-count E[auc] at exact rank");
  c.expect(pair_expected(true, d, P("[4][1,2][3]")) == ratio(33, 48), "pair-count E[auc] at alpha rank");
  c.expect(marginal_functional(d) == rv({"1/2", "1/2", "7/16", "1/16"}), "E[Y]");
  RationalVector ea(4);
  for (const auto& atom : d.support()) {
    const RationalVector a = alpha(atom.y);
    for (std::size_t i = 0; i < 4; ++i) ea[i] += atom.p * a[i];
  }
  c.expect(ea == rv({"1/8", "1/8", "7/48", "1/48"}), "E[alpha]");
  c.expect(induce_preorder(ea) == P("[4][1,2][3]"), "alpha rank");
  c.expect(exact_rank(d) == P("[4][3][1,2]"), "exact rank");
  c.expect(rho(P("[4][3][1,2]")) == std::vector<std::int64_t>{2, 2, -1, -3}, "rho exact");
  c.expect(rho(P("[4][1,2][3]")) == std::vector<std::int64_t>{0, 0, 3, -3}, "rho alpha");
  c.expect(check_propriety(d, k).verdict == Verdict::kImproper, "verdict");
}

void criterion2(Check& c) {
  const auto spec = two_model_grouped(10, 90);
  const Rational below = expected_auc_grouped(spec, P("[1][2]"));
  const Rational above = expected_auc_grouped(spec, P("[2][1]"));
  c.expect(std::abs(to_double(below) - 0.496) <= 5e-4, "induced ranking near 0.496");
  c.expect(std::abs(to_double(above) - 0.504) <= 5e-4, "opposite ranking near 0.504");
  c.expect(std::abs(to_double(below) - 0.495930259845) < 1e-11, "frozen oracle value");
  c.expect(below + above == 1, "the two rankings are complementary");
  for (const auto& [f, o] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {1, 5}, {3, 9}, {4, 8}, {2, 10}}) {
    const auto small = two_model_grouped(f, o);
    const auto joint = small.to_mixture().expand();
    for (const char* order : {"[1][2]", "[2][1]", "[1,2]"}) {
      c.expect(expected_auc_grouped(small, P(order)) ==
                   expected_score(joint, auc_kernel(), small.lift(P(order))),
               "brute force at sizes " + std::to_string(f) + "/" + std::to_string(o) + " " + order);
    }
  }
  c.note = "exact " + to_decimal(below, 6) + " / " + to_decimal(above, 6);
}

void criterion3(Check& c) {
  std::mt19937_64 rng(2024);
  std::size_t count = 0;
  for (std::size_t n : {3, 4, 5}) {
    for (int trial = 0; trial < 40; ++trial, ++count) {
      const auto d = trial % 2 ? rankprop::testing::random_joint(rng, n) : random_sparse_distribution(n, rng);
      for (const bool use_auc : {false, true}) {
        const auto k = use_auc ? auc_kernel() : u_kernel();
        const auto opt = optimal_preorders(d, k);
        c.expect(argmax_by_scan(use_auc, d) == as_set(opt.members),
                 std::string(use_auc ? "auc" : "u") + " on n=" + std::to_string(n));
      }
    }
  }
  c.note = std::to_string(count) + " distributions";
}

void criterion4(Check& c) {
  std::mt19937_64 rng(4048);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto d = trial % 2 ? rankprop::testing::random_joint(rng, n) : random_sparse_distribution(n, rng);
    c.expect(check_propriety(d, u_kernel()).verdict == Verdict::kProperHere, "fast path");
    c.expect(argmax_by_scan(false, d) == as_set(weak_rank_members(d)), "argmax equals R*");
  }
  SearchOptions opts;
  opts.n = 4;
  opts.budget = 10'000;
  opts.seed = 42;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  c.expect(search_counterexamples(u_kernel(), opts).empty(), "search(u) emitted a certificate");
  opts.n = 5;
  c.expect(search_counterexamples(u_kernel(), opts).empty(), "search(u) n=5 emitted a certificate");
  c.note = "200 distributions, 2 x 10^4 search trials";
}

void criterion5(Check& c) {
  std::mt19937_64 rng(5050);
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t positives = 1; positives < n; ++positives) {
      for (int trial = 0; trial < 12; ++trial, ++count) {
        const auto d = rankprop::testing::random_constant_count_joint(rng, n, positives);
        c.expect(verify_known_count(d), "fast path");
        const auto brute = brute_force_propriety(d, auc_kernel());
        c.expect(brute.verdict == Verdict::kProperHere, "brute-force verdict");
        c.expect(argmax_by_scan(true, d) == as_set(weak_rank_members(d)), "argmax equals R*");
      }
    }
  }
  c.note = std::to_string(count) + " distributions";
}

void criterion6(Check& c) {
  std::mt19937_64 rng(6060);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto prod = rankprop::testing::random_product(rng, n);
    const auto report = verify_independence(prod);
    c.expect(report.preorders_equal(), "alpha rank equals exact rank");
    c.expect(report.identity_holds(), "pairwise identity");
    RationalVector ea(n);
    const JointDistribution joint = prod.expand();
    for (const auto& atom : joint.support()) {
      const RationalVector a = alpha(atom.y);
      for (std::size_t i = 0; i < n; ++i) ea[i] += atom.p * a[i];
    }
    const RationalVector& m = prod.marginals();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        c.expect(sgn(ea[i] - ea[j]) == sgn(m[i] - m[j]), "sign identity");
      }
    }
  }
  c.note = "60 product distributions";
}

void criterion7(Check& c) {
  std::mt19937_64 rng(7070);
  for (int trial = 0; trial < 30; ++trial) {
    const PairModel theta = rankprop::testing::random_pair_model(rng);
    const ScalarMap f = rankprop::testing::random_map(rng);
    const std::size_t n = 2 + trial % 3;
    for (const Rational cst : {ratio(1, 2), Rational(0), Rational(1)}) {
      const auto id = verify_expected_auc_identity(theta, f, n, cst);
      c.expect(id.holds(), "identity at c=" + to_string(cst));
      c.expect(id.lhs == rankprop::testing::enumerated_expected_auc(theta, f, n, cst), "independent lhs");
    }
  }
  c.note = "30 models, c in {1/2, 0, 1}";
}

void criterion8(Check& c) {
  std::size_t exhaustive = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto preorders = enumerate_preorders(n).to_vector();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const OutcomeVector y = rankprop::testing::outcome_from_mask(n, m);
      if (y.is_degenerate()) continue;
      for (const auto& p : preorders) {
        ++exhaustive;
        c.expect(roc_curve(y, p).area() == auc_kernel().score(y, p), "exhaustive area");
      }
    }
  }
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<std::size_t> size(2, 50);
  std::uniform_int_distribution<int> coarse(0, 20);
  std::uniform_real_distribution<double> fine(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(rng);
    OutcomeVector y = rankprop::testing::random_outcome(rng, n);
    while (y.is_degenerate()) y = rankprop::testing::random_outcome(rng, n);
    std::vector<double> scores(n);
    for (auto& s : scores) s = trial % 2 ? coarse(rng) / 20.0 : fine(rng);
    const TotalPreorder p = induce_preorder(scores);
    const Rational exact = auc_kernel().score(y, p);
    c.expect(roc_curve(y, p).area() == exact, "random area");
    c.expect(std::abs(auc_from_scores(scores, y) - to_double(exact)) <= 1e-12, "float path");
  }
  c.note = std::to_string(exhaustive) + " exhaustive pairs, 1000 random";
}

void criterion9(Check& c) {
  std::size_t sequences = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const OutcomeVector y = rankprop::testing::outcome_from_mask(n, m);
      if (y.is_degenerate()) continue;
      ++sequences;
      SequentialState state = initial_state();
      for (std::size_t t = 0; t < n; ++t) {
        const SequentialState next = insert_next(state, y[t]);
        c.expect(next.current.restricted_to_prefix(state.current.size()) == state.current, "compatibility");
        for (std::size_t i = 0; i <= t; ++i) {
          for (std::size_t j = 0; j <= t; ++j) {
            if (y[i] == 0 && y[j] == 1) c.expect(next.current.strictly_precedes(i, j), "separation");
          }
        }
        state = next;
      }
      const SequenceRun run = run_sequence(y);
      c.expect(run.final_auc == 1, "final auc of " + y.to_string());
      c.expect(auc(y, state.current.restricted_to_prefix(n)) == 1, "realized auc");
    }
  }
  c.note = std::to_string(sequences) + " sequences";
}

void criterion10(Check& c) {
  const PairModel theta({{"a", 1, ratio(3, 10)}, {"a", 0, ratio(1, 10)}, {"b", 1, ratio(2, 10)}, {"b", 0, ratio(4, 10)}});
  const Rational step = ratio(1, 4);
  for (std::size_t n : {2, 3}) {
    const auto model = CovariateModel::iid(theta, n);
    const auto brier = verify_map_coord(model, brier_sum_score(), uniform_grid(n, step));
    c.expect(brier.claim_asserted() && brier.ok(), "iid brier coordinatewise");
    c.expect(brier.map_opt.optimal, "iid brier map-opt");
    const auto ranked = verify_map_coord(model, rank_form_score(u_kernel()), preorder_grid(n));
    c.expect(ranked.claim_asserted() && ranked.ok() && ranked.map_opt.optimal, "iid u map-opt");
    c.expect(expected_mapping_score(model, conditional_mean_mapping(model), brier_sum_score()) ==
                 expected_mapping_score_iterated(model, conditional_mean_mapping(model), brier_sum_score()),
             "iterated conditioning");
  }
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<long> w(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const long a1 = w(rng), a0 = w(rng), b1 = w(rng), b0 = w(rng);
    const long t = a1 + a0 + b1 + b0;
    const auto model = CovariateModel::iid(
        PairModel({{"a", 1, ratio(a1, t)}, {"a", 0, ratio(a0, t)}, {"b", 1, ratio(b1, t)}, {"b", 0, ratio(b0, t)}}), 2);
    const auto report = verify_map_coord(model, brier_sum_score(), uniform_grid(2, step));
    c.expect(report.claim_asserted() && report.ok(), "random iid model");
  }
  const auto first = verify_map_coord(rankprop::testing::first_condition_violator(), brier_sum_score(),
                                      uniform_grid(2, step));
  c.expect(!first.condition_i && !first.claim_asserted(), "condition (i) violator not asserted");
  c.expect(first.map_opt.optimal, "condition (i) violator map-opt");
  const auto second = verify_map_coord(rankprop::testing::second_condition_violator(), brier_sum_score(),
                                       uniform_grid(2, step));
  c.expect(second.condition_i && !second.condition_ii && !second.claim_asserted(),
           "condition (ii) violator not asserted");
  c.expect(second.map_opt.optimal, "condition (ii) violator map-opt");
}

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "four-item AUC counterexample, exact", 1.0, criterion1},
      {2, "grouped two-model expected AUC with brute-force cross-check", 5.0, criterion2},
      {3, "maximizers of the expected score equal the contained set", 60.0, criterion3},
      {4, "propriety of u and empty u search", 120.0, criterion4},
      {5, "known positive count gives AUC propriety", 0.0, criterion5},
      {6, "independence gives AUC propriety", 0.0, criterion6},
      {7, "expected AUC identity", 0.0, criterion7},
      {8, "ROC area equals AUC", 0.0, criterion8},
      {9, "sequential perfect separation", 0.0, criterion9},
      {10, "mapping optimality and coordinate-wise checks", 0.0, criterion10},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = crit.time_limit_s <= 0 || seconds < crit.time_limit_s;
    const bool ok = check.ok() && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << crit.id << "] " << crit.title << " (" << timing;
    if (crit.time_limit_s > 0) std::cout << " < " << crit.time_limit_s << "s";
    std::cout << "; " << check.summary();
    if (!check.note.empty()) std::cout << "; " << check.note;
    if (!in_time) std::cout << "; over time limit";
    std::cout << ")\n";
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}
