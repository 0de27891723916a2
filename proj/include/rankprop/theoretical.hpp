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

#ifndef RANKPROP_THEORETICAL_HPP_
#define RANKPROP_THEORETICAL_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rankprop/kernels.hpp"
#include "rankprop/rational.hpp"

namespace rankprop {

// Sampling model θ for one (covariate, response) pair over a finite
// covariate alphabet.
class PairModel {
 public:
  struct Atom {
    std::string x;
    int y = 0;
    Rational p;
    friend bool operator==(const Atom&, const Atom&) = default;
  };

  // Probabilities must be positive and sum to one; (x, y) pairs distinct.
  explicit PairModel(std::vector<Atom> atoms);

  const std::vector<Atom>& support() const { return atoms_; }
  // π_c = θ(Y = c)
  Rational class_probability(int c) const;

  friend bool operator==(const PairModel&, const PairModel&) = default;

 private:
  std::vector<Atom> atoms_;
};

// f: covariate value -> rational score.
class ScalarMap {
 public:
  ScalarMap() = default;
  explicit ScalarMap(std::map<std::string, Rational> values) : values_(std::move(values)) {}

  // Throws InvalidInput for a covariate value the map does not cover.
  const Rational& operator()(const std::string& x) const;
  const std::map<std::string, Rational>& values() const { return values_; }

  friend bool operator==(const ScalarMap&, const ScalarMap&) = default;

 private:
  std::map<std::string, Rational> values_;
};

// P[f(X₁) > f(X₂)] + ½ P[f(X₁) = f(X₂)] for independent pairs conditioned on
// Y₁ = 1, Y₂ = 0. Throws UndefinedConditional when either class has
// probability zero.
Rational theoretical_auc(const PairModel& theta, const ScalarMap& f);

struct ExpectedAucIdentity {
  Rational lhs;  // expected empirical AUC by enumeration
  Rational rhs;  // (1 − π₀ⁿ − π₁ⁿ)·tauc + c·(π₀ⁿ + π₁ⁿ)
  bool holds() const { return lhs == rhs; }
};

// Enumerates all |support|ⁿ i.i.d. samples of n pairs, ranking by f(X) with
// exact ties, and compares the mean AUC against the closed form. `degenerate`
// is the AUC assigned to all-0/all-1 samples. Throws ResourceLimit when the
// number of samples exceeds `max_terms`.
ExpectedAucIdentity verify_expected_auc_identity(const PairModel& theta, const ScalarMap& f,
                                                 std::size_t n,
                                                 const Rational& degenerate = default_degenerate_auc(),
                                                 std::size_t max_terms = 1'000'000);

}  // namespace rankprop

#endif  // RANKPROP_THEORETICAL_HPP_
