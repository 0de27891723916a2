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

#include "rankprop/distribution.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rankprop/errors.hpp"

namespace rankprop {
namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ResourceLimit("expanding " + std::to_string(n) + " independent outcomes", cap);
  }
}

OutcomeVector outcome_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::uint8_t> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return OutcomeVector(std::move(y));
}

}  // namespace

JointDistribution JointDistribution::from_atoms(std::size_t n, std::vector<Atom> atoms) {
  if (n == 0) throw InvalidInput("distribution needs at least one outcome variable");
  if (atoms.empty()) throw InvalidInput("distribution support is empty");
  Rational total;
  for (const Atom& a : atoms) {
    if (a.y.size() != n) {
      throw InvalidInput("support outcome " + a.y.to_string() + " does not have length " +
                         std::to_string(n));
    }
    if (a.p <= 0) {
      throw InvalidInput("support outcome " + a.y.to_string() +
                         " has non-positive probability " + to_string(a.p));
    }
    total += a.p;
  }
  if (total != 1) {
    throw InvalidInput("probabilities sum to " + to_string(total) + ", not 1");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.y < b.y; });
  for (std::size_t k = 1; k < atoms.size(); ++k) {
    if (atoms[k - 1].y == atoms[k].y) {
      throw InvalidInput("outcome " + atoms[k].y.to_string() + " listed twice");
    }
  }
  return JointDistribution(n, std::move(atoms));
}

JointDistribution JointDistribution::point_mass(const OutcomeVector& y) {
  return from_atoms(y.size(), {Atom{y, Rational(1)}});
}

Rational JointDistribution::probability(const OutcomeVector& y) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), y,
                             [](const Atom& a, const OutcomeVector& v) { return a.y < v; });
  if (it != support_.end() && it->y == y) return it->p;
  return Rational(0);
}

ProductDistribution::ProductDistribution(RationalVector marginals)
    : marginals_(std::move(marginals)) {
  if (marginals_.empty()) throw InvalidInput("product distribution needs at least one marginal");
  for (const auto& p : marginals_) {
    if (p < 0 || p > 1) throw InvalidInput("marginal " + to_string(p) + " outside [0,1]");
  }
}

Rational ProductDistribution::probability(const OutcomeVector& y) const {
  if (y.size() != size()) throw InvalidInput("outcome length does not match product size");
  Rational prob(1);
  for (std::size_t i = 0; i < size(); ++i) prob *= y[i] ? marginals_[i] : Rational(1 - marginals_[i]);
  return prob;
}

JointDistribution ProductDistribution::expand(std::size_t cap) const {
  check_cap(size(), std::min<std::size_t>(cap, 62));
  std::vector<Atom> atoms;
  const std::uint64_t count = std::uint64_t{1} << size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    OutcomeVector y = outcome_from_mask(size(), mask);
    Rational p = probability(y);
    if (p > 0) atoms.push_back({std::move(y), std::move(p)});
  }
  return JointDistribution::from_atoms(size(), std::move(atoms));
}

MixtureDistribution::MixtureDistribution(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("mixture needs at least one component");
  Rational total;
  for (const auto& c : components_) {
    if (c.weight <= 0) throw InvalidInput("mixture weight " + to_string(c.weight) + " is not positive");
    if (c.product.size() != components_.front().product.size()) {
      throw InvalidInput("mixture components differ in length");
    }
    total += c.weight;
  }
  if (total != 1) throw InvalidInput("mixture weights sum to " + to_string(total) + ", not 1");
}

RationalVector MixtureDistribution::marginals() const {
  RationalVector m(size());
  for (const auto& c : components_) {
    for (std::size_t i = 0; i < size(); ++i) m[i] += c.weight * c.product.marginals()[i];
  }
  return m;
}

JointDistribution MixtureDistribution::expand(std::size_t cap) const {
  check_cap(size(), cap);
  std::map<OutcomeVector, Rational> mass;
  for (const auto& c : components_) {
    const JointDistribution joint = c.product.expand(cap);
    for (const Atom& a : joint.support()) mass[a.y] += c.weight * a.p;
  }
  std::vector<Atom> atoms;
  atoms.reserve(mass.size());
  for (auto& [y, p] : mass) atoms.push_back({y, p});
  return JointDistribution::from_atoms(size(), std::move(atoms));
}

RationalVector marginal_functional(const JointDistribution& dist) {
  RationalVector m(dist.size());
  for (const Atom& a : dist.support()) {
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (a.y[i]) m[i] += a.p;
    }
  }
  return m;
}

TotalPreorder exact_rank(const JointDistribution& dist) {
  const RationalVector m = marginal_functional(dist);
  return induce_preorder(std::span<const Rational>(m));
}

Relation pairwise_rank(const JointDistribution& dist, std::size_t i, std::size_t j) {
  if (i >= dist.size() || j >= dist.size()) {
    throw InvalidInput("index out of range for a distribution on " + std::to_string(dist.size()) +
                       " outcomes");
  }
  if (i == j) throw InvalidInput("pairwise comparison needs two distinct indices");
  Rational i_above;  // P[Yi > Yj]
  Rational j_above;  // P[Yi < Yj]
  for (const Atom& a : dist.support()) {
    if (a.y[i] > a.y[j]) i_above += a.p;
    if (a.y[i] < a.y[j]) j_above += a.p;
  }
  if (i_above < j_above) return Relation::kPrecedes;
  if (i_above > j_above) return Relation::kFollows;
  return Relation::kTied;
}

PreorderRange weak_rank_members(const JointDistribution& dist, std::size_t cap) {
  return contained_set(exact_rank(dist), cap);
}

RationalVector expected_sigma(const JointDistribution& dist, const ScoreKernel& kernel) {
  RationalVector e(dist.size());
  for (const Atom& a : dist.support()) {
    const RationalVector s = kernel.sigma(a.y);
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (s[i] != 0) e[i] += a.p * s[i];
    }
  }
  return e;
}

Rational expected_g(const JointDistribution& dist, const ScoreKernel& kernel) {
  Rational e;
  for (const Atom& a : dist.support()) e += a.p * kernel.g(a.y);
  return e;
}

Rational expected_score(const JointDistribution& dist, const ScoreKernel& kernel,
                        const TotalPreorder& preorder) {
  if (preorder.size() != dist.size()) {
    throw InvalidInput("preorder covers " + std::to_string(preorder.size()) +
                       " indices but the distribution has " + std::to_string(dist.size()));
  }
  const RationalVector weights = expected_sigma(dist, kernel);
  const RankVector rho = rank_vector(preorder);
  Rational total = expected_g(dist, kernel);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    total += weights[i] * Rational(static_cast<long>(rho[i]));
  }
  return total;
}

Rational expected_score_by_enumeration(const JointDistribution& dist, const ScoreKernel& kernel,
                                       const TotalPreorder& preorder) {
  if (preorder.size() != dist.size()) {
    throw InvalidInput("preorder and distribution sizes differ");
  }
  Rational total;
  for (const Atom& a : dist.support()) total += a.p * kernel.score(a.y, preorder);
  return total;
}

OptimalPreorders optimal_preorders(const JointDistribution& dist, const ScoreKernel& kernel,
                                   std::size_t cap) {
  const RationalVector weights = expected_sigma(dist, kernel);
  TotalPreorder outer = induce_preorder(std::span<const Rational>(weights));
  PreorderRange members = contained_set(outer, cap);
  return OptimalPreorders{std::move(outer), std::move(members)};
}

}  // namespace rankprop
