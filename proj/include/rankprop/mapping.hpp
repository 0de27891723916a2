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

#ifndef RANKPROP_MAPPING_HPP_
#define RANKPROP_MAPPING_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankprop/distribution.hpp"
#include "rankprop/kernels.hpp"
#include "rankprop/rational.hpp"
#include "rankprop/theoretical.hpp"

namespace rankprop {

using CovariateTuple = std::vector<std::string>;

// Finite joint law of (X, Y) with X a tuple of n covariate values and
// Y ∈ {0,1}^n.
class CovariateModel {
 public:
  struct Atom {
    CovariateTuple x;
    OutcomeVector y;
    Rational p;
    friend bool operator==(const Atom&, const Atom&) = default;
  };

  // Positive probabilities summing to one, distinct (x, y), lengths n.
  static CovariateModel from_atoms(std::size_t n, std::vector<Atom> atoms);

  // n independent copies of a single-pair model.
  static CovariateModel iid(const PairModel& theta, std::size_t n,
                            std::size_t max_atoms = 1'000'000);

  std::size_t size() const { return n_; }
  const std::vector<Atom>& support() const { return atoms_; }

  // Distinct covariate tuples with positive probability, sorted.
  std::vector<CovariateTuple> x_support() const;
  Rational x_probability(const CovariateTuple& x) const;

  // P_{Y|X=x}. Throws UndefinedConditional when P(X = x) = 0.
  JointDistribution conditional(const CovariateTuple& x) const;

  friend bool operator==(const CovariateModel&, const CovariateModel&) = default;

 private:
  CovariateModel(std::size_t n, std::vector<Atom> atoms) : n_(n), atoms_(std::move(atoms)) {}

  std::size_t n_ = 0;
  std::vector<Atom> atoms_;
};

// A covariate-to-prediction mapping: either a full table on covariate tuples
// or one table on single covariate values applied to every coordinate.
class PredictionMapping {
 public:
  using FullTable = std::map<CovariateTuple, RationalVector>;
  using CoordinateTable = std::map<std::string, Rational>;

  static PredictionMapping full(FullTable table);
  static PredictionMapping coordinatewise(CoordinateTable table);

  bool is_coordinatewise() const { return coordinate_.has_value(); }

  // Throws InvalidInput when x is not covered.
  RationalVector apply(const CovariateTuple& x) const;

 private:
  std::optional<FullTable> full_;
  std::optional<CoordinateTable> coordinate_;
};

// A scoring function on vector-valued predictions.
struct VectorScore {
  std::string name;
  std::function<Rational(const OutcomeVector&, std::span<const Rational>)> evaluate;
};

// −Σᵢ (yᵢ − mᵢ)²
VectorScore brier_sum_score();
// s(y, ≼_m) for a rank-sum kernel: only the preorder induced by m matters.
VectorScore rank_form_score(const ScoreKernel& kernel);

// s(y, f(x)).
Rational mapping_score(const CovariateTuple& x, const OutcomeVector& y,
                       const PredictionMapping& f, const VectorScore& s);

// Σ P(x, y)·s(y, f(x)) over the joint support.
Rational expected_mapping_score(const CovariateModel& model, const PredictionMapping& f,
                                const VectorScore& s);

// Σₓ P(x)·E[s(Y, f(x)) | X = x].
Rational expected_mapping_score_iterated(const CovariateModel& model, const PredictionMapping& f,
                                         const VectorScore& s);

// x ↦ E[Y | X = x] on the covariate support.
PredictionMapping conditional_mean_mapping(const CovariateModel& model);

// Candidate predictions offered at every covariate tuple.
using PredictionGrid = std::vector<RationalVector>;

// {0, step, 2·step, ..., 1}^n. `step` must divide one.
PredictionGrid uniform_grid(std::size_t n, const Rational& step,
                            std::size_t max_points = 1'000'000);

// One representative vector (its class levels) per total preorder on n
// indices, for rank-valued mappings.
PredictionGrid preorder_grid(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

struct MapOptReport {
  // Expected score of x ↦ E[Y | X = x].
  Rational functional_score;
  // Best expected score over every mapping from the covariate support into
  // the grid. The score separates over x, so the per-x maximum is attained.
  Rational best_candidate_score;
  std::size_t candidates_per_x = 0;
  bool optimal = false;
};

// Checks the conditional-functional mapping against all grid-valued mappings.
MapOptReport verify_map_opt(const CovariateModel& model, const VectorScore& s,
                            const PredictionGrid& grid);

struct MapCoordReport {
  // (i) Yᵢ is conditionally independent of X given Xᵢ.
  bool condition_i = false;
  // (ii) the law of Yᵢ given Xᵢ is the same for every i.
  bool condition_ii = false;
  // The conditional-mean mapping factors as one table applied per coordinate.
  bool coordinatewise_optimal = false;
  // Set when the conditional-mean mapping is coordinate-wise.
  std::optional<PredictionMapping> coordinatewise_mapping;
  MapOptReport map_opt;

  // The coordinate-wise optimum is only claimed when (i) and (ii) hold.
  bool claim_asserted() const { return condition_i && condition_ii; }
  bool ok() const { return !claim_asserted() || (coordinatewise_optimal && map_opt.optimal); }
};

MapCoordReport verify_map_coord(const CovariateModel& model, const VectorScore& s,
                                const PredictionGrid& grid);

// Y₁, ..., Yₙ mutually independent given X = x, for every x in the support.
bool conditionally_independent_given_x(const CovariateModel& model);

}  // namespace rankprop

#endif  // RANKPROP_MAPPING_HPP_
