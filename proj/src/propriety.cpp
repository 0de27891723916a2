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

#include "rankprop/propriety.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "rankprop/errors.hpp"

namespace rankprop {

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::kProperHere ? "proper-here" : "improper";
}

ProprietyCertificate check_propriety(const JointDistribution& dist, const ScoreKernel& kernel) {
  TotalPreorder exact = exact_rank(dist);
  const RationalVector weights = expected_sigma(dist, kernel);
  TotalPreorder sigma = induce_preorder(std::span<const Rational>(weights));
  ProprietyCertificate cert{
      .kernel = kernel.name,
      .distribution = dist,
      .verdict = is_contained(sigma, exact) ? Verdict::kProperHere : Verdict::kImproper,
      .exact_rank = exact,
      .sigma_rank = sigma,
  };
  if (cert.verdict == Verdict::kImproper) {
    cert.witness_score = expected_score(dist, kernel, exact);
    cert.beating_score = expected_score(dist, kernel, sigma);
    cert.witness = std::move(exact);
    cert.beating = std::move(sigma);
  }
  return cert;
}

BruteForceResult brute_force_propriety(const JointDistribution& dist, const ScoreKernel& kernel,
                                       std::size_t cap) {
  const TotalPreorder exact = exact_rank(dist);
  BruteForceResult result;
  bool first = true;
  for (const TotalPreorder& p : enumerate_preorders(dist.size(), cap)) {
    Rational score = expected_score(dist, kernel, p);
    if (first || score > result.max_score) {
      result.max_score = score;
      result.maximizers.clear();
      first = false;
    }
    if (score == result.max_score) result.maximizers.push_back(p);
  }
  for (const auto& p : result.maximizers) {
    if (!is_contained(p, exact)) {
      result.verdict = Verdict::kImproper;
      break;
    }
  }
  return result;
}

bool verify_known_count(const JointDistribution& dist, const Rational& degenerate) {
  const std::size_t count = dist.support().front().y.n1();
  for (const Atom& a : dist.support()) {
    if (a.y.n1() != count) {
      throw PreconditionViolation("number of positives varies over the support (" +
                                  std::to_string(count) + " vs " + std::to_string(a.y.n1()) +
                                  ")");
    }
  }
  return check_propriety(dist, auc_kernel(degenerate)).verdict == Verdict::kProperHere;
}

bool IndependenceReport::identity_holds() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairIdentity& p) { return p.holds; });
}

IndependenceReport verify_independence(const ProductDistribution& product, std::size_t cap) {
  const JointDistribution joint = product.expand(cap);
  const std::size_t n = joint.size();
  RationalVector expected_alpha(n);
  for (const Atom& a : joint.support()) {
    const RationalVector al = alpha(a.y);
    for (std::size_t i = 0; i < n; ++i) expected_alpha[i] += a.p * al[i];
  }
  const RationalVector marginals = marginal_functional(joint);
  IndependenceReport report{
      .alpha_rank = induce_preorder(std::span<const Rational>(expected_alpha)),
      .exact_rank = induce_preorder(std::span<const Rational>(marginals)),
      .pairs = {},
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational factor;
      for (const Atom& a : joint.support()) {
        long ones = static_cast<long>(a.y.n1()) - a.y[i] - a.y[j];
        long zeros = static_cast<long>(n) - 2 - ones;
        factor += a.p * ratio(1, (1 + zeros) * (1 + ones));
      }
      PairIdentity pair{
          .i = i,
          .j = j,
          .alpha_gap = expected_alpha[i] - expected_alpha[j],
          .marginal_gap = marginals[i] - marginals[j],
          .factor = factor,
      };
      pair.holds = pair.alpha_gap == pair.marginal_gap * pair.factor;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

LatentReport verify_latent(const MixtureDistribution& mixture, const Rational& degenerate,
                           std::size_t cap) {
  LatentReport report;
  report.condition_i = true;
  for (const auto& c : mixture.components()) {
    const JointDistribution joint = c.product.expand(cap);
    const RationalVector marginals = marginal_functional(joint);
    RationalVector expected_alpha(joint.size());
    for (const Atom& a : joint.support()) {
      const RationalVector al = alpha(a.y);
      for (std::size_t i = 0; i < joint.size(); ++i) expected_alpha[i] += a.p * al[i];
    }
    report.component_marginal_ranks.push_back(
        induce_preorder(std::span<const Rational>(marginals)));
    report.component_alpha_ranks.push_back(
        induce_preorder(std::span<const Rational>(expected_alpha)));
    if (report.component_marginal_ranks.back() != report.component_alpha_ranks.back()) {
      report.condition_i = false;
    }
  }
  report.condition_ii = std::all_of(
      report.component_marginal_ranks.begin(), report.component_marginal_ranks.end(),
      [&](const TotalPreorder& p) { return p == report.component_marginal_ranks.front(); });
  report.proper_here =
      check_propriety(mixture.expand(cap), auc_kernel(degenerate)).verdict == Verdict::kProperHere;
  return report;
}

GroupedMixtureSpec::GroupedMixtureSpec(std::vector<Group> groups,
                                       std::vector<Component> components)
    : groups_(std::move(groups)), components_(std::move(components)) {
  if (groups_.empty()) throw InvalidInput("grouped spec needs at least one group");
  for (const auto& g : groups_) {
    if (g.size == 0) throw InvalidInput("group '" + g.label + "' is empty");
  }
  if (components_.empty()) throw InvalidInput("grouped spec needs at least one component");
  Rational total;
  for (const auto& c : components_) {
    if (c.weight <= 0) throw InvalidInput("component weight must be positive");
    if (c.probabilities.size() != groups_.size()) {
      throw InvalidInput("component needs one probability per group");
    }
    for (const auto& q : c.probabilities) {
      if (q < 0 || q > 1) throw InvalidInput("group probability " + to_string(q) + " outside [0,1]");
    }
    total += c.weight;
  }
  if (total != 1) throw InvalidInput("component weights sum to " + to_string(total) + ", not 1");
}

std::size_t GroupedMixtureSpec::total_size() const {
  std::size_t total = 0;
  for (const auto& g : groups_) total += g.size;
  return total;
}

RationalVector GroupedMixtureSpec::group_marginals() const {
  RationalVector m(groups_.size());
  for (const auto& c : components_) {
    for (std::size_t g = 0; g < groups_.size(); ++g) m[g] += c.weight * c.probabilities[g];
  }
  return m;
}

MixtureDistribution GroupedMixtureSpec::to_mixture() const {
  std::vector<MixtureDistribution::Component> out;
  for (const auto& c : components_) {
    RationalVector p;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      p.insert(p.end(), groups_[g].size, c.probabilities[g]);
    }
    out.push_back({c.weight, ProductDistribution(std::move(p))});
  }
  return MixtureDistribution(std::move(out));
}

TotalPreorder GroupedMixtureSpec::lift(const TotalPreorder& group_order) const {
  if (group_order.size() != groups_.size()) {
    throw InvalidInput("group order covers " + std::to_string(group_order.size()) +
                       " groups but the mixture has " + std::to_string(groups_.size()));
  }
  std::vector<std::size_t> levels;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    levels.insert(levels.end(), groups_[g].size, group_order.level(g));
  }
  return TotalPreorder::from_levels(levels);
}

Rational expected_auc_grouped(const GroupedMixtureSpec& spec, const TotalPreorder& group_order,
                              const Rational& degenerate) {
  const auto& groups = spec.groups();
  const std::size_t num_groups = groups.size();
  if (group_order.size() != num_groups) {
    throw InvalidInput("group order does not match the number of groups");
  }
  constexpr std::size_t kMaxCountTuples = 10'000'000;
  std::size_t tuples = 1;
  for (const auto& g : groups) {
    tuples *= g.size + 1;
    if (tuples > kMaxCountTuples) {
      throw ResourceLimit("enumerating per-group positive counts", kMaxCountTuples);
    }
  }
  const long total = static_cast<long>(spec.total_size());

  // Pair weight between a negative in group a and a positive in group b.
  std::vector<std::vector<Rational>> pair_weight(num_groups, std::vector<Rational>(num_groups));
  for (std::size_t a = 0; a < num_groups; ++a) {
    for (std::size_t b = 0; b < num_groups; ++b) {
      if (group_order.strictly_precedes(a, b)) {
        pair_weight[a][b] = 1;
      } else if (group_order.ties(a, b)) {
        pair_weight[a][b] = ratio(1, 2);
      }
    }
  }

  Rational expected;
  for (const auto& component : spec.components()) {
    std::vector<RationalVector> pmf(num_groups);
    for (std::size_t g = 0; g < num_groups; ++g) {
      const auto m = static_cast<unsigned long>(groups[g].size);
      const Rational& q = component.probabilities[g];
      const Rational miss = 1 - q;
      for (unsigned long k = 0; k <= m; ++k) {
        pmf[g].push_back(binomial(m, k) * pow(q, k) * pow(miss, m - k));
      }
    }
    std::vector<std::size_t> counts(num_groups, 0);
    Rational conditional;
    while (true) {
      Rational prob(1);
      long positives = 0;
      for (std::size_t g = 0; g < num_groups; ++g) {
        prob *= pmf[g][counts[g]];
        positives += static_cast<long>(counts[g]);
      }
      if (prob != 0) {
        if (positives == 0 || positives == total) {
          conditional += prob * degenerate;
        } else {
          Rational concordant;
          for (std::size_t a = 0; a < num_groups; ++a) {
            const long negatives = static_cast<long>(groups[a].size - counts[a]);
            if (negatives == 0) continue;
            for (std::size_t b = 0; b < num_groups; ++b) {
              if (counts[b] == 0 || pair_weight[a][b] == 0) continue;
              concordant += pair_weight[a][b] * Rational(negatives * static_cast<long>(counts[b]));
            }
          }
          conditional += prob * concordant / Rational((total - positives) * positives);
        }
      }
      std::size_t g = num_groups;
      while (g-- > 0) {
        if (++counts[g] <= groups[g].size) break;
        counts[g] = 0;
      }
      if (g == static_cast<std::size_t>(-1)) break;
    }
    expected += component.weight * conditional;
  }
  return expected;
}

JointDistribution random_sparse_distribution(std::size_t n, std::mt19937_64& rng) {
  if (n == 0 || n > 20) throw InvalidInput("random distributions need 1 <= n <= 20");
  const std::uint64_t outcomes = std::uint64_t{1} << n;
  std::uniform_int_distribution<std::uint64_t> pick_outcome(0, outcomes - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::size_t support_size;
  if (coin(rng) == 1) {
    support_size = std::min<std::uint64_t>(outcomes, 2 + coin(rng));
  } else {
    std::uniform_int_distribution<std::uint64_t> any_size(2, outcomes);
    support_size = any_size(rng);
  }

  std::set<std::uint64_t> chosen;
  auto popcount = [](std::uint64_t m) { return static_cast<int>(__builtin_popcountll(m)); };
  // Prefer outcomes with differing counts of positives.
  for (int attempt = 0; chosen.size() < support_size && attempt < 64; ++attempt) {
    std::uint64_t m = pick_outcome(rng);
    bool new_count = std::none_of(chosen.begin(), chosen.end(),
                                  [&](std::uint64_t c) { return popcount(c) == popcount(m); });
    if (new_count || attempt >= 16) chosen.insert(m);
  }
  while (chosen.size() < support_size) chosen.insert(pick_outcome(rng));

  std::uniform_int_distribution<long> weight(1, 16);
  std::vector<long> weights;
  long total = 0;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    weights.push_back(weight(rng));
    total += weights.back();
  }
  std::vector<Atom> atoms;
  std::size_t k = 0;
  for (std::uint64_t m : chosen) {
    std::vector<std::uint8_t> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint8_t>((m >> i) & 1U);
    atoms.push_back({OutcomeVector(std::move(y)), ratio(weights[k++], total)});
  }
  return JointDistribution::from_atoms(n, std::move(atoms));
}

std::vector<ProprietyCertificate> search_counterexamples(const ScoreKernel& kernel,
                                                         const SearchOptions& options) {
  if (options.n == 0) throw InvalidInput("search needs n >= 1");
  if (options.n > options.cap) {
    throw ResourceLimit("counterexample search on " + std::to_string(options.n) + " outcomes",
                        options.cap);
  }
  std::vector<ProprietyCertificate> found;
  for (const auto& dist : options.pool) {
    ProprietyCertificate cert = check_propriety(dist, kernel);
    if (cert.verdict == Verdict::kImproper) found.push_back(std::move(cert));
  }

  std::vector<std::optional<ProprietyCertificate>> slots(options.budget);
  auto run_trials = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < options.budget; t += stride) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
      std::mt19937_64 rng(seq);
      ProprietyCertificate cert = check_propriety(random_sparse_distribution(options.n, rng), kernel);
      if (cert.verdict == Verdict::kImproper) slots[t] = std::move(cert);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, options.budget));
  if (jobs <= 1) {
    run_trials(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) workers.emplace_back(run_trials, w, jobs);
  }
  for (auto& slot : slots) {
    if (slot) found.push_back(std::move(*slot));
  }
  return found;
}

}  // namespace rankprop
