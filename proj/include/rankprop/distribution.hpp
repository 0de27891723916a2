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

#ifndef RANKPROP_DISTRIBUTION_HPP_
#define RANKPROP_DISTRIBUTION_HPP_

#include <cstddef>
#include <vector>

#include "rankprop/kernels.hpp"
#include "rankprop/preorder.hpp"
#include "rankprop/rational.hpp"

namespace rankprop {

// Largest n for which a product or mixture is expanded to all 2^n outcomes.
inline constexpr std::size_t kDefaultExpansionCap = 20;

struct Atom {
  OutcomeVector y;
  Rational p;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// A finite-support distribution on {0,1}^n. Only positive-probability
// outcomes are stored, sorted by outcome vector.
class JointDistribution {
 public:
  // Rejects (never renormalizes) supports whose probabilities do not sum to
  // exactly one, as well as non-positive probabilities, repeated outcomes and
  // outcomes of the wrong length. Throws InvalidInput.
  static JointDistribution from_atoms(std::size_t n, std::vector<Atom> atoms);
  static JointDistribution point_mass(const OutcomeVector& y);

  std::size_t size() const { return n_; }
  const std::vector<Atom>& support() const { return support_; }
  Rational probability(const OutcomeVector& y) const;

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  JointDistribution(std::size_t n, std::vector<Atom> support)
      : n_(n), support_(std::move(support)) {}

  std::size_t n_ = 0;
  std::vector<Atom> support_;
};

// Mutually independent outcomes with P[Yᵢ = 1] = pᵢ.
class ProductDistribution {
 public:
  // Throws InvalidInput on an empty vector or entries outside [0,1].
  explicit ProductDistribution(RationalVector marginals);

  std::size_t size() const { return marginals_.size(); }
  const RationalVector& marginals() const { return marginals_; }
  Rational probability(const OutcomeVector& y) const;
  // Throws ResourceLimit when size() > cap.
  JointDistribution expand(std::size_t cap = kDefaultExpansionCap) const;

  friend bool operator==(const ProductDistribution&, const ProductDistribution&) = default;

 private:
  RationalVector marginals_;
};

// Finite mixture of product distributions: a discrete latent variable picks
// the component, then outcomes are independent.
class MixtureDistribution {
 public:
  struct Component {
    Rational weight;
    ProductDistribution product;
    friend bool operator==(const Component&, const Component&) = default;
  };

  // Weights must be positive and sum to one; components must agree on n.
  explicit MixtureDistribution(std::vector<Component> components);

  std::size_t size() const { return components_.front().product.size(); }
  const std::vector<Component>& components() const { return components_; }
  RationalVector marginals() const;
  JointDistribution expand(std::size_t cap = kDefaultExpansionCap) const;

  friend bool operator==(const MixtureDistribution&, const MixtureDistribution&) = default;

 private:
  std::vector<Component> components_;
};

// M(P) = E_P[Y].
RationalVector marginal_functional(const JointDistribution& dist);

// R(P): the preorder induced by the marginals.
TotalPreorder exact_rank(const JointDistribution& dist);

enum class Relation { kPrecedes, kTied, kFollows };

// Compares P[Yᵢ > Yⱼ] with P[Yᵢ < Yⱼ]; i ≼ j iff the former is not larger.
// Indices are 0-based. Throws InvalidInput on i == j or out-of-range indices.
Relation pairwise_rank(const JointDistribution& dist, std::size_t i, std::size_t j);

// R*(P): every total preorder contained in R(P).
PreorderRange weak_rank_members(const JointDistribution& dist,
                                std::size_t cap = kDefaultEnumerationCap);

// E_P[σ(Y)] for the kernel's weight vector.
RationalVector expected_sigma(const JointDistribution& dist, const ScoreKernel& kernel);

Rational expected_g(const JointDistribution& dist, const ScoreKernel& kernel);

// E_P[g(Y)] + Σᵢ E_P[σᵢ(Y)]·ρᵢ(≼).
Rational expected_score(const JointDistribution& dist, const ScoreKernel& kernel,
                        const TotalPreorder& preorder);

// Σ_y P(y)·s(y, ≼), summing realized scores over the support.
Rational expected_score_by_enumeration(const JointDistribution& dist, const ScoreKernel& kernel,
                                       const TotalPreorder& preorder);

struct OptimalPreorders {
  // Preorder induced by E_P[σ(Y)].
  TotalPreorder outer;
  // Exactly the maximizers of the expected score over all total preorders.
  PreorderRange members;
};

OptimalPreorders optimal_preorders(const JointDistribution& dist, const ScoreKernel& kernel,
                                   std::size_t cap = kDefaultEnumerationCap);

}  // namespace rankprop

#endif  // RANKPROP_DISTRIBUTION_HPP_
