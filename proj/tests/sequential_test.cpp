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

#include "rankprop/kernels.hpp"
#include "rankprop/sequential.hpp"
#include "test_support.hpp"

namespace rankprop {
namespace {

TotalPreorder P(const char* text) { return TotalPreorder::parse(text); }

SequentialState feed(std::initializer_list<int> outcomes) {
  SequentialState s = initial_state();
  for (int y : outcomes) s = insert_next(s, y);
  return s;
}

bool same_relations_on_prefix(const TotalPreorder& next, const TotalPreorder& prev) {
  for (std::size_t i = 0; i < prev.size(); ++i) {
    for (std::size_t j = 0; j < prev.size(); ++j) {
      if (next.precedes_or_ties(i, j) != prev.precedes_or_ties(i, j)) return false;
    }
  }
  return true;
}

TEST(InsertNextTest, Examples) {
  EXPECT_EQ(initial_state().current, P("[1]"));
  EXPECT_EQ(initial_state().t(), 0u);
  EXPECT_EQ(feed({0, 1}).current, P("[1][3][2]"));
  EXPECT_EQ(feed({0, 0, 1}).current, P("[1][2][4][3]"));
  EXPECT_EQ(feed({0, 0, 1}).t(), 3u);
}

TEST(InsertNextTest, OneSidedHistories) {
  const auto ones = feed({1, 1});
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(ones.current.strictly_precedes(2, i));
  const auto zeros = feed({0, 0});
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(zeros.current.strictly_precedes(i, 2));
  EXPECT_THROW(insert_next(initial_state(), 2), std::exception);
}

TEST(RunSequenceTest, Examples) {
  EXPECT_EQ(run_sequence(OutcomeVector({0, 1, 0, 1, 1})).final_auc, 1);
  EXPECT_EQ(run_sequence(OutcomeVector({1, 1, 1})).final_auc, ratio(1, 2));
  EXPECT_EQ(run_sequence(OutcomeVector({0, 0}), ratio(1, 5)).final_auc, ratio(1, 5));
}

TEST(RunSequenceTest, ExhaustiveUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const OutcomeVector y = testing::outcome_from_mask(n, m);
      SequentialState state = initial_state();
      for (std::size_t t = 0; t < n; ++t) {
        const SequentialState next = insert_next(state, y[t]);
        ASSERT_EQ(next.current.size(), t + 2);
        EXPECT_TRUE(same_relations_on_prefix(next.current, state.current));
        for (std::size_t i = 0; i <= t; ++i) {
          for (std::size_t j = 0; j <= t; ++j) {
            if (y[i] == 0 && y[j] == 1) EXPECT_TRUE(next.current.strictly_precedes(i, j));
          }
          const std::size_t fresh = t + 1;
          if (y[i] == 0) EXPECT_TRUE(next.current.strictly_precedes(i, fresh));
          if (y[i] == 1) EXPECT_TRUE(next.current.strictly_precedes(fresh, i));
        }
        state = next;
      }
      const SequenceRun run = run_sequence(y);
      ASSERT_EQ(run.steps.size(), n);
      for (std::size_t t = 1; t < n; ++t) {
        EXPECT_TRUE(same_relations_on_prefix(run.steps[t], run.steps[t - 1]));
      }
      EXPECT_EQ(run.final_preorder, state.current.restricted_to_prefix(n));
      EXPECT_EQ(run.final_auc, y.is_degenerate() ? ratio(1, 2) : Rational(1));
      EXPECT_EQ(run.final_auc, auc(y, run.final_preorder));
    }
  }
}

}  // namespace
}  // namespace rankprop
