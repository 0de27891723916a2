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

#include "rankprop/sequential.hpp"

#include <stdexcept>

#include "rankprop/errors.hpp"

namespace rankprop {
namespace {

bool perfectly_separated(const std::vector<std::uint8_t>& outcomes, const TotalPreorder& p) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      if (outcomes[i] == 0 && outcomes[j] == 1 && !p.strictly_precedes(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

SequentialState initial_state() { return SequentialState{{}, TotalPreorder::full_tie(1)}; }

SequentialState insert_next(const SequentialState& state, int outcome) {
  if (outcome != 0 && outcome != 1) throw InvalidInput("outcomes must be 0 or 1");
  SequentialState next{state.outcomes, state.current};
  next.outcomes.push_back(static_cast<std::uint8_t>(outcome));
  const std::size_t observed = next.outcomes.size();

  // Insert the new class just above the highest class holding an observed 0.
  std::size_t insert_at = 0;
  const auto& classes = next.current.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (auto i : classes[c]) {
      if (next.outcomes[i] == 0) insert_at = c + 1;
    }
  }
  std::vector<TotalPreorder::Class> grown(classes.begin(), classes.end());
  grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(insert_at),
               TotalPreorder::Class{observed});
  next.current = TotalPreorder::from_classes(std::move(grown));
  return next;
}

SequenceRun run_sequence(const OutcomeVector& outcomes, const Rational& degenerate) {
  if (outcomes.size() == 0) throw InvalidInput("sequence is empty");
  SequentialState state = initial_state();
  SequenceRun run{{}, TotalPreorder::full_tie(1), Rational()};
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    SequentialState next = insert_next(state, outcomes[t]);
    if (next.current.restricted_to_prefix(state.current.size()) != state.current) {
      throw std::logic_error("sequential step is not compatible with the previous preorder");
    }
    TotalPreorder observed = next.current.restricted_to_prefix(t + 1);
    if (!perfectly_separated(next.outcomes, observed)) {
      throw std::logic_error("sequential step lost perfect separation");
    }
    run.steps.push_back(std::move(observed));
    state = std::move(next);
  }
  run.final_preorder = run.steps.back();
  run.final_auc = auc(outcomes, run.final_preorder, degenerate);
  return run;
}

}  // namespace rankprop
