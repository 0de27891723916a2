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

#ifndef RANKPROP_SEQUENTIAL_HPP_
#define RANKPROP_SEQUENTIAL_HPP_

#include <cstdint>
#include <vector>

#include "rankprop/kernels.hpp"
#include "rankprop/preorder.hpp"
#include "rankprop/rational.hpp"

namespace rankprop {

// After t observations: the observed outcomes and a preorder over the t
// observed indices plus the next, still unobserved one.
struct SequentialState {
  std::vector<std::uint8_t> outcomes;
  TotalPreorder current;

  std::size_t t() const { return outcomes.size(); }
};

// t = 0: the first index on its own.
SequentialState initial_state();

// Records the outcome of the pending index, then ranks a new pending index
// in its own class directly above every observed 0 and below every observed
// 1. Throws InvalidInput when `outcome` is not 0 or 1.
SequentialState insert_next(const SequentialState& state, int outcome);

struct SequenceRun {
  // Preorder over the observed indices after each step (entry k covers
  // indices 0..k).
  std::vector<TotalPreorder> steps;
  TotalPreorder final_preorder;
  Rational final_auc;
};

// Feeds the outcomes through insert_next. Throws std::logic_error if a step
// breaks compatibility with the previous preorder or loses perfect
// separation.
SequenceRun run_sequence(const OutcomeVector& outcomes,
                         const Rational& degenerate = default_degenerate_auc());

}  // namespace rankprop

#endif  // RANKPROP_SEQUENTIAL_HPP_
