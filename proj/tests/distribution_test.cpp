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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rankprop/distribution.hpp"
#include "rankprop/errors.hpp"
#include "test_support.hpp"

namespace rankprop {
namespace {

using testing::four_item_counterexample;
using testing::rv;

TotalPreorder P(const char* text) { return TotalPreorder::parse(text); }
OutcomeVector Y(std::initializer_list<std::uint8_t> v) { return OutcomeVector(std::vector<std::uint8_t>(v)); }

// Realized score by pair counting, independent of the rank-sum form.
Rational pair_score(const std::string& kernel, const OutcomeVector& y, const TotalPreorder& p) {
  const Rational u = testing::wmw_u_pairs(y, p);
  if (kernel == "u") return u;
  if (y.is_degenerate()) return ratio(1, 2);
  return u / Rational(y.n0() * y.n1());
}

Rational pair_expected(const std::string& kernel, const JointDistribution& d, const TotalPreorder& p) {
  Rational total;
  for (const auto& atom : d.support()) total += atom.p * pair_score(kernel, atom.y, p);
  return total;
}

TEST(JointDistributionTest, Validation) {
  EXPECT_THROW(JointDistribution::from_atoms(2, {{Y({0, 1}), ratio(1, 2)}}), InvalidInput);
  EXPECT_THROW(JointDistribution::from_atoms(2, {{Y({0, 1}), ratio(1, 2)}, {Y({0, 1}), ratio(1, 2)}}),
               InvalidInput);
  EXPECT_THROW(JointDistribution::from_atoms(2, {{Y({0, 1}), 1}, {Y({1, 1}), 0}}), InvalidInput);
  EXPECT_THROW(JointDistribution::from_atoms(2, {{Y({0, 1, 1}), 1}}), InvalidInput);
  EXPECT_THROW(ProductDistribution(rv({"1/2", "3/2"})), InvalidInput);
  EXPECT_THROW(MixtureDistribution({{ratio(1, 2), ProductDistribution(rv({"1/2"}))}}), InvalidInput);
  const auto d = four_item_counterexample();
  EXPECT_EQ(d.probability(Y({0, 0, 1, 0})), ratio(7, 16));
  EXPECT_EQ(d.probability(Y({1, 1, 1, 1})), 0);
}

TEST(MarginalFunctionalTest, Examples) {
  EXPECT_EQ(marginal_functional(four_item_counterexample()), rv({"1/2", "1/2", "7/16", "1/16"}));
  EXPECT_EQ(marginal_functional(JointDistribution::point_mass(Y({1, 0}))), rv({"1", "0"}));
  EXPECT_EQ(marginal_functional(ProductDistribution(rv({"0.3", "0.7"})).expand()), rv({"3/10", "7/10"}));
}

TEST(MarginalFunctionalTest, ProductExpansionRecoversMarginals) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto prod = testing::random_product(rng, 1 + trial % 7);
    const auto joint = prod.expand();
    EXPECT_EQ(marginal_functional(joint), prod.marginals());
    for (const auto& atom : joint.support()) EXPECT_EQ(atom.p, prod.probability(atom.y));
  }
}

TEST(MarginalFunctionalTest, MixtureMarginalsAreWeighted) {
  const MixtureDistribution mix({{ratio(1, 4), ProductDistribution(rv({"1", "0"}))},
                                 {ratio(3, 4), ProductDistribution(rv({"1/3", "1/3"}))}});
  EXPECT_EQ(mix.marginals(), rv({"1/2", "1/4"}));
  EXPECT_EQ(marginal_functional(mix.expand()), mix.marginals());
}

TEST(ExpansionTest, CapIsEnforced) {
  EXPECT_THROW(ProductDistribution(RationalVector(21, ratio(1, 2))).expand(), ResourceLimit);
  EXPECT_THROW(ProductDistribution(RationalVector(5, ratio(1, 2))).expand(4), ResourceLimit);
}

TEST(ExactRankTest, Examples) {
  EXPECT_EQ(exact_rank(four_item_counterexample()), P("[4][3][1,2]"));
  EXPECT_EQ(exact_rank(ProductDistribution(rv({"1/3", "1/3", "1/3"})).expand()), P("[1,2,3]"));
  EXPECT_EQ(exact_rank(JointDistribution::point_mass(Y({1, 0}))), P("[2][1]"));
}

TEST(PairwiseRankTest, Examples) {
  const auto d = four_item_counterexample();
  EXPECT_EQ(pairwise_rank(d, 0, 1), Relation::kTied);
  EXPECT_EQ(pairwise_rank(d, 2, 3), Relation::kFollows);
  EXPECT_EQ(pairwise_rank(d, 3, 2), Relation::kPrecedes);
  EXPECT_THROW(pairwise_rank(d, 0, 4), InvalidInput);
  EXPECT_THROW(pairwise_rank(d, 1, 1), InvalidInput);
}

TEST(PairwiseRankTest, AgreesWithExactRankAndProposition) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto d = testing::random_joint(rng, n);
    const TotalPreorder r = exact_rank(d);
    const RationalVector m = marginal_functional(d);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational ij, ji;
        for (const auto& atom : d.support()) {
          if (atom.y[i] == 1 && atom.y[j] == 0) ij += atom.p;
          if (atom.y[i] == 0 && atom.y[j] == 1) ji += atom.p;
        }
        EXPECT_EQ(ij <= ji, m[i] <= m[j]);
        const Relation rel = pairwise_rank(d, i, j);
        EXPECT_EQ(rel == Relation::kPrecedes, r.strictly_precedes(i, j));
        EXPECT_EQ(rel == Relation::kTied, r.ties(i, j));
        EXPECT_EQ(rel == Relation::kFollows, r.strictly_precedes(j, i));
      }
    }
  }
}

TEST(WeakRankTest, DelegatesToContainedSet) {
  const auto members = weak_rank_members(four_item_counterexample()).to_vector();
  EXPECT_EQ(std::set<TotalPreorder>(members.begin(), members.end()),
            (std::set<TotalPreorder>{P("[4][3][1,2]"), P("[4][3][1][2]"), P("[4][3][2][1]")}));
}

TEST(ExpectedSigmaTest, Examples) {
  const auto d = four_item_counterexample();
  EXPECT_EQ(expected_sigma(d, auc_kernel()), rv({"1/16", "1/16", "7/96", "1/96"}));
  EXPECT_EQ(expected_sigma(d, u_kernel()), rv({"1/4", "1/4", "7/32", "1/32"}));
  EXPECT_EQ(expected_sigma(JointDistribution::point_mass(Y({0, 0, 0})), auc_kernel()), rv({"0", "0", "0"}));
}

TEST(ExpectedScoreTest, FourItemCounterexampleValues) {
  const auto d = four_item_counterexample();
  EXPECT_EQ(expected_score(d, auc_kernel(), P("[4][3][1,2]")), ratio(31, 48));
  EXPECT_EQ(expected_score(d, auc_kernel(), P("[4][1,2][3]")), ratio(33, 48));
  EXPECT_EQ(pair_expected("auc", d, P("[4][3][1,2]")), ratio(31, 48));
  EXPECT_EQ(pair_expected("auc", d, P("[4][1,2][3]")), ratio(33, 48));
}

TEST(ExpectedScoreTest, PointMassGivesRealizedScore) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const OutcomeVector y = testing::random_outcome(rng, n);
    const TotalPreorder p = testing::random_preorder(rng, n);
    const auto d = JointDistribution::point_mass(y);
    for (const auto& k : {u_kernel(), auc_kernel(), gini_kernel()}) {
      EXPECT_EQ(expected_score(d, k, p), k.score(y, p));
    }
  }
}

TEST(ExpectedScoreTest, LinearityMatchesEnumeration) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto d = testing::random_joint(rng, n);
    const TotalPreorder p = testing::random_preorder(rng, n);
    for (const auto& k : {u_kernel(), auc_kernel(ratio(1, 3)), gini_kernel()}) {
      EXPECT_EQ(expected_score(d, k, p), expected_score_by_enumeration(d, k, p));
    }
    EXPECT_EQ(expected_score(d, u_kernel(), p), pair_expected("u", d, p));
    EXPECT_EQ(expected_score(d, auc_kernel(), p), pair_expected("auc", d, p));
  }
}

TEST(OptimalPreordersTest, Examples) {
  const auto d = four_item_counterexample();
  EXPECT_EQ(optimal_preorders(d, auc_kernel()).outer, P("[4][1,2][3]"));
  EXPECT_EQ(optimal_preorders(d, u_kernel()).outer, P("[4][3][1,2]"));
  const auto exch = ProductDistribution(rv({"2/5", "2/5", "2/5"})).expand();
  const auto opt = optimal_preorders(exch, auc_kernel());
  EXPECT_EQ(opt.outer, TotalPreorder::full_tie(3));
  EXPECT_EQ(opt.members.count(), 13u);
}

// The maximizers over all preorders, found by exhaustive pair-count scoring,
// are exactly the preorders contained in the σ-induced one.
TEST(OptimalPreordersTest, MaximizersAreExactlyTheContainedSet) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto d = testing::random_joint(rng, n);
    const auto all = testing::all_preorders_by_scan(n);
    for (const std::string kernel : {"u", "auc"}) {
      Rational best;
      std::set<TotalPreorder> argmax;
      bool first = true;
      for (const auto& p : all) {
        const Rational s = pair_expected(kernel, d, p);
        if (first || s > best) {
          best = s;
          argmax = {p};
          first = false;
        } else if (s == best) {
          argmax.insert(p);
        }
      }
      const auto opt = optimal_preorders(d, kernel_by_name(kernel));
      const auto members = opt.members.to_vector();
      EXPECT_EQ(std::set<TotalPreorder>(members.begin(), members.end()), argmax);
    }
  }
}

}  // namespace
}  // namespace rankprop
