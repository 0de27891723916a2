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

#ifndef RANKPROP_PROPRIETY_HPP_
#define RANKPROP_PROPRIETY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rankprop/distribution.hpp"
#include "rankprop/kernels.hpp"
#include "rankprop/preorder.hpp"
#include "rankprop/rational.hpp"

namespace rankprop {

enum class Verdict { kProperHere, kImproper };

// "proper-here" / "improper"
std::string_view verdict_name(Verdict verdict);

// Outcome of checking one kernel on one distribution. The kernel is proper
// here when the preorder induced by E_P[σ(Y)] is contained in R(P); then the
// maximizers of the expected score are exactly the preorders contained in it,
// all of which lie in R*(P).
//
// When improper, `witness` is R(P) (a member of R*(P)) and `beating` is the
// σ-induced preorder, which attains the maximal expected score. Usually the
// witness scores strictly less. If R(P) is itself contained in the σ-induced
// preorder the scores tie and the failure is one of strictness only: an
// optimal preorder lies outside R*(P).
struct ProprietyCertificate {
  std::string kernel;
  JointDistribution distribution;
  Verdict verdict = Verdict::kProperHere;
  TotalPreorder exact_rank;
  TotalPreorder sigma_rank;
  std::optional<TotalPreorder> witness = std::nullopt;
  std::optional<Rational> witness_score = std::nullopt;
  std::optional<TotalPreorder> beating = std::nullopt;
  std::optional<Rational> beating_score = std::nullopt;

  bool witness_suboptimal() const {
    return witness_score && beating_score && *beating_score > *witness_score;
  }
};

// Fast path through the rearrangement argument; never enumerates.
ProprietyCertificate check_propriety(const JointDistribution& dist, const ScoreKernel& kernel);

struct BruteForceResult {
  Rational max_score;
  std::vector<TotalPreorder> maximizers;
  // Proper here iff every maximizer lies in R*(P).
  Verdict verdict = Verdict::kProperHere;
};

// Scores every total preorder on n indices. Throws ResourceLimit for n > cap.
BruteForceResult brute_force_propriety(const JointDistribution& dist, const ScoreKernel& kernel,
                                       std::size_t cap = kDefaultEnumerationCap);

// AUC propriety when the number of positives is the same on every support
// outcome. Throws PreconditionViolation when it varies.
bool verify_known_count(const JointDistribution& dist,
                        const Rational& degenerate = default_degenerate_auc());

struct PairIdentity {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational alpha_gap;     // E[αᵢ] − E[αⱼ]
  Rational marginal_gap;  // E[Yᵢ] − E[Yⱼ]
  Rational factor;        // E[1 / ((1 + n₀ without i,j)(1 + n₁ without i,j))]
  bool holds = false;     // alpha_gap == marginal_gap · factor
};

struct IndependenceReport {
  TotalPreorder alpha_rank;
  TotalPreorder exact_rank;
  std::vector<PairIdentity> pairs;

  bool preorders_equal() const { return alpha_rank == exact_rank; }
  bool identity_holds() const;
  bool ok() const { return preorders_equal() && identity_holds(); }
};

// Expands the product exactly and compares the E[α]-induced preorder with the
// exact rank, and checks the factorization of E[αᵢ] − E[αⱼ] for every pair.
IndependenceReport verify_independence(const ProductDistribution& product,
                                       std::size_t cap = kDefaultExpansionCap);

struct LatentReport {
  std::vector<TotalPreorder> component_marginal_ranks;
  std::vector<TotalPreorder> component_alpha_ranks;
  // (i): within every component, E[Y|Z] and E[α(Y)|Z] induce the same preorder.
  bool condition_i = false;
  // (ii): that preorder is the same in every component.
  bool condition_ii = false;
  bool proper_here = false;

  bool conditions_hold() const { return condition_i && condition_ii; }
};

LatentReport verify_latent(const MixtureDistribution& mixture,
                           const Rational& degenerate = default_degenerate_auc(),
                           std::size_t cap = kDefaultExpansionCap);

// Individuals split into labelled groups; given a latent component the
// outcomes are independent with a per-group success probability.
class GroupedMixtureSpec {
 public:
  struct Group {
    std::size_t size = 0;
    std::string label;
    friend bool operator==(const Group&, const Group&) = default;
  };
  struct Component {
    Rational weight;
    RationalVector probabilities;  // one per group
    friend bool operator==(const Component&, const Component&) = default;
  };

  // Throws InvalidInput on empty groups, weights not summing to one, or
  // probabilities outside [0,1].
  GroupedMixtureSpec(std::vector<Group> groups, std::vector<Component> components);

  const std::vector<Group>& groups() const { return groups_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t total_size() const;

  // Marginal success probability per group.
  RationalVector group_marginals() const;

  // One product component per latent component, individuals listed group
  // by group.
  MixtureDistribution to_mixture() const;

  // Individual-level preorder: ranked as their groups, tied within a group.
  TotalPreorder lift(const TotalPreorder& group_order) const;

  friend bool operator==(const GroupedMixtureSpec&, const GroupedMixtureSpec&) = default;

 private:
  std::vector<Group> groups_;
  std::vector<Component> components_;
};

// Expected AUC of a group-level ranking. Conditions on the component and on
// the per-group positive counts, whose joint law is a product of binomials;
// the AUC depends on the outcome only through those counts.
Rational expected_auc_grouped(const GroupedMixtureSpec& spec, const TotalPreorder& group_order,
                              const Rational& degenerate = default_degenerate_auc());

// Random sparse distribution on {0,1}^n, biased toward small supports whose
// outcomes differ in their number of positives.
JointDistribution random_sparse_distribution(std::size_t n, std::mt19937_64& rng);

struct SearchOptions {
  std::size_t n = 4;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t cap = kDefaultEnumerationCap;
  // Checked before the random trials.
  std::vector<JointDistribution> pool;
};

// Improper certificates, pool entries first and then trials in index order.
// Trial t draws from an RNG seeded by (seed, t), so results do not depend on
// `jobs`.
std::vector<ProprietyCertificate> search_counterexamples(const ScoreKernel& kernel,
                                                         const SearchOptions& options);

}  // namespace rankprop

#endif  // RANKPROP_PROPRIETY_HPP_
