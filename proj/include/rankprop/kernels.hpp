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

#ifndef RANKPROP_KERNELS_HPP_
#define RANKPROP_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankprop/preorder.hpp"
#include "rankprop/rational.hpp"

namespace rankprop {

// A realized binary outcome vector y ∈ {0,1}^n.
class OutcomeVector {
 public:
  OutcomeVector() = default;
  // Throws InvalidInput on entries other than 0 and 1.
  explicit OutcomeVector(std::vector<std::uint8_t> values);
  static OutcomeVector from_ints(std::span<const int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::uint8_t> values() const { return values_; }

  std::size_t n1() const { return n1_; }
  std::size_t n0() const { return values_.size() - n1_; }
  // All-0 or all-1.
  bool is_degenerate() const { return n1_ == 0 || n1_ == values_.size(); }

  // "(0,1,1)"
  std::string to_string() const;

  friend bool operator==(const OutcomeVector& a, const OutcomeVector& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const OutcomeVector& a, const OutcomeVector& b) {
    return a.values_ < b.values_;
  }

 private:
  std::vector<std::uint8_t> values_;
  std::size_t n1_ = 0;
};

// A rank-sum scoring function s(y, ≼) = g(y) + Σᵢ σᵢ(y)·ρᵢ(≼).
struct ScoreKernel {
  std::string name;
  std::function<Rational(const OutcomeVector&)> g;
  std::function<RationalVector(const OutcomeVector&)> sigma;

  // Throws InvalidInput on a length mismatch.
  Rational score(const OutcomeVector& y, const TotalPreorder& preorder) const;
};

inline Rational default_degenerate_auc() { return ratio(1, 2); }

// Wilcoxon–Mann–Whitney u: g = n₀n₁/2, σᵢ = yᵢ/2.
ScoreKernel u_kernel();
// Empirical AUC: g = 1/2 (c on all-0/all-1 outcomes), σᵢ = αᵢ/2.
ScoreKernel auc_kernel(const Rational& degenerate = default_degenerate_auc());
// Gini = 2·AUC − 1: g = 0 (2c − 1 on all-0/all-1 outcomes), σᵢ = αᵢ.
ScoreKernel gini_kernel(const Rational& degenerate = default_degenerate_auc());
// "u", "auc" or "gini"; throws InvalidInput otherwise.
ScoreKernel kernel_by_name(std::string_view name,
                           const Rational& degenerate = default_degenerate_auc());

// Number of (negative, positive) pairs with the negative ranked strictly
// below, ties counting one half. Values lie on the half-integers in
// [0, n₀n₁].
Rational wmw_u(const OutcomeVector& y, const TotalPreorder& preorder);

// αᵢ(y) = yᵢ / (n₀n₁), or the zero vector on degenerate outcomes.
RationalVector alpha(const OutcomeVector& y);

// u / (n₀n₁), or `degenerate` when y is all-0 or all-1.
Rational auc(const OutcomeVector& y, const TotalPreorder& preorder,
             const Rational& degenerate = default_degenerate_auc());

Rational gini(const OutcomeVector& y, const TotalPreorder& preorder,
              const Rational& degenerate = default_degenerate_auc());

struct RocPoint {
  Rational fpr;
  Rational tpr;
  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

// Empirical ROC polyline from (1,1) to (0,0), one vertex per tie class in
// ascending order.
struct RocCurve {
  std::vector<RocPoint> points;

  // Trapezoid area under the polyline.
  Rational area() const;
  // Header "fpr,tpr"; exact "a/b" cells, or decimals when `decimal` is set.
  std::string to_csv(bool decimal = false) const;
};

// Throws DegenerateOutcome when y is all-0 or all-1.
RocCurve roc_curve(const OutcomeVector& y, const TotalPreorder& preorder);

// Floating-point AUC from raw scores by midrank sums. Ties are exact double
// equality, which matches induce_preorder on the same scores.
double auc_from_scores(std::span<const double> scores, const OutcomeVector& y,
                       double degenerate = 0.5);

enum class SingleOutcomeRule { kBrier, kLog, kSpherical };

// Throws InvalidInput for names other than "brier", "log", "spherical".
SingleOutcomeRule parse_single_outcome_rule(std::string_view name);

// Σᵢ Sᵢ(yᵢ, mᵢ) for a strictly proper single-outcome rule. The log rule
// returns -infinity when a boundary forecast misses its outcome.
double marginal_score_sum(const OutcomeVector& y, std::span<const Rational> forecast,
                          SingleOutcomeRule rule);

// Exact −Σᵢ (yᵢ − mᵢ)².
Rational brier_score_sum(const OutcomeVector& y, std::span<const Rational> forecast);

}  // namespace rankprop

#endif  // RANKPROP_KERNELS_HPP_
