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

#include "rankprop/mapping.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rankprop/errors.hpp"
#include "rankprop/preorder.hpp"

namespace rankprop {

CovariateModel CovariateModel::from_atoms(std::size_t n, std::vector<Atom> atoms) {
  if (n == 0) throw InvalidInput("covariate model needs n >= 1");
  if (atoms.empty()) throw InvalidInput("covariate model support is empty");
  Rational total;
  std::set<std::pair<CovariateTuple, OutcomeVector>> seen;
  for (const auto& a : atoms) {
    if (a.x.size() != n || a.y.size() != n) {
      throw InvalidInput("covariate model atom does not have length " + std::to_string(n));
    }
    if (a.p <= 0) throw InvalidInput("covariate model probabilities must be positive");
    if (!seen.emplace(a.x, a.y).second) throw InvalidInput("covariate model atom listed twice");
    total += a.p;
  }
  if (total != 1) throw InvalidInput("covariate model probabilities sum to " + to_string(total));
  return CovariateModel(n, std::move(atoms));
}

CovariateModel CovariateModel::iid(const PairModel& theta, std::size_t n, std::size_t max_atoms) {
  const auto& pairs = theta.support();
  std::size_t count = 1;
  for (std::size_t k = 0; k < n; ++k) {
    count *= pairs.size();
    if (count > max_atoms) throw ResourceLimit("expanding i.i.d. covariate model", max_atoms);
  }
  std::vector<Atom> atoms;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Atom atom;
    std::vector<std::uint8_t> y(n);
    atom.p = 1;
    for (std::size_t k = 0; k < n; ++k) {
      atom.x.push_back(pairs[pick[k]].x);
      y[k] = static_cast<std::uint8_t>(pairs[pick[k]].y);
      atom.p *= pairs[pick[k]].p;
    }
    atom.y = OutcomeVector(std::move(y));
    atoms.push_back(std::move(atom));
    std::size_t k = n;
    while (k-- > 0) {
      if (++pick[k] < pairs.size()) break;
      pick[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return from_atoms(n, std::move(atoms));
}

std::vector<CovariateTuple> CovariateModel::x_support() const {
  std::set<CovariateTuple> xs;
  for (const auto& a : atoms_) xs.insert(a.x);
  return {xs.begin(), xs.end()};
}

Rational CovariateModel::x_probability(const CovariateTuple& x) const {
  Rational total;
  for (const auto& a : atoms_) {
    if (a.x == x) total += a.p;
  }
  return total;
}

JointDistribution CovariateModel::conditional(const CovariateTuple& x) const {
  const Rational px = x_probability(x);
  if (px == 0) throw UndefinedConditional("conditioning on a covariate tuple of probability zero");
  std::vector<rankprop::Atom> atoms;
  for (const auto& a : atoms_) {
    if (a.x == x) atoms.push_back({a.y, a.p / px});
  }
  return JointDistribution::from_atoms(n_, std::move(atoms));
}

PredictionMapping PredictionMapping::full(FullTable table) {
  PredictionMapping m;
  m.full_ = std::move(table);
  return m;
}

PredictionMapping PredictionMapping::coordinatewise(CoordinateTable table) {
  PredictionMapping m;
  m.coordinate_ = std::move(table);
  return m;
}

RationalVector PredictionMapping::apply(const CovariateTuple& x) const {
  if (full_) {
    auto it = full_->find(x);
    if (it == full_->end()) throw InvalidInput("mapping does not cover the covariate tuple");
    if (it->second.size() != x.size()) throw InvalidInput("mapping output has the wrong length");
    return it->second;
  }
  RationalVector out;
  out.reserve(x.size());
  for (const auto& value : x) {
    auto it = coordinate_->find(value);
    if (it == coordinate_->end()) {
      throw InvalidInput("mapping has no value for covariate '" + value + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

VectorScore brier_sum_score() {
  return VectorScore{"brier", [](const OutcomeVector& y, std::span<const Rational> m) {
                       return brier_score_sum(y, m);
                     }};
}

VectorScore rank_form_score(const ScoreKernel& kernel) {
  return VectorScore{kernel.name, [kernel](const OutcomeVector& y, std::span<const Rational> m) {
                       return kernel.score(y, induce_preorder(m));
                     }};
}

Rational mapping_score(const CovariateTuple& x, const OutcomeVector& y,
                       const PredictionMapping& f, const VectorScore& s) {
  const RationalVector prediction = f.apply(x);
  return s.evaluate(y, prediction);
}

Rational expected_mapping_score(const CovariateModel& model, const PredictionMapping& f,
                                const VectorScore& s) {
  Rational total;
  for (const auto& a : model.support()) total += a.p * mapping_score(a.x, a.y, f, s);
  return total;
}

namespace {

Rational conditional_score(const JointDistribution& cond, const VectorScore& s,
                           std::span<const Rational> prediction) {
  Rational total;
  for (const auto& a : cond.support()) total += a.p * s.evaluate(a.y, prediction);
  return total;
}

}  // namespace

Rational expected_mapping_score_iterated(const CovariateModel& model, const PredictionMapping& f,
                                         const VectorScore& s) {
  Rational total;
  for (const auto& x : model.x_support()) {
    const RationalVector prediction = f.apply(x);
    total += model.x_probability(x) * conditional_score(model.conditional(x), s, prediction);
  }
  return total;
}

PredictionMapping conditional_mean_mapping(const CovariateModel& model) {
  PredictionMapping::FullTable table;
  for (const auto& x : model.x_support()) table[x] = marginal_functional(model.conditional(x));
  return PredictionMapping::full(std::move(table));
}

PredictionGrid uniform_grid(std::size_t n, const Rational& step, std::size_t max_points) {
  if (step <= 0 || step > 1) throw InvalidInput("grid step must lie in (0, 1]");
  const Rational levels_q = 1 / step;
  if (levels_q.get_den() != 1) throw InvalidInput("grid step must divide one");
  const std::size_t levels = levels_q.get_num().get_ui() + 1;
  std::size_t points = 1;
  for (std::size_t k = 0; k < n; ++k) {
    points *= levels;
    if (points > max_points) throw ResourceLimit("building a prediction grid", max_points);
  }
  PredictionGrid grid;
  grid.reserve(points);
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    RationalVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = step * Rational(static_cast<long>(digits[k]));
    grid.push_back(std::move(v));
    std::size_t k = n;
    while (k-- > 0) {
      if (++digits[k] < levels) break;
      digits[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return grid;
}

PredictionGrid preorder_grid(std::size_t n, std::size_t cap) {
  PredictionGrid grid;
  for (const auto& p : enumerate_preorders(n, cap)) {
    RationalVector v;
    for (auto level : p.levels()) v.emplace_back(static_cast<unsigned long>(level));
    grid.push_back(std::move(v));
  }
  return grid;
}

MapOptReport verify_map_opt(const CovariateModel& model, const VectorScore& s,
                            const PredictionGrid& grid) {
  if (grid.empty()) throw InvalidInput("prediction grid is empty");
  MapOptReport report;
  report.optimal = true;
  report.candidates_per_x = grid.size();
  for (const auto& x : model.x_support()) {
    const JointDistribution cond = model.conditional(x);
    const Rational px = model.x_probability(x);
    const RationalVector functional = marginal_functional(cond);
    const Rational honest = conditional_score(cond, s, functional);
    Rational best;
    bool first = true;
    for (const auto& z : grid) {
      Rational value = conditional_score(cond, s, z);
      if (first || value > best) {
        best = std::move(value);
        first = false;
      }
    }
    if (honest < best) report.optimal = false;
    report.functional_score += px * honest;
    report.best_candidate_score += px * best;
  }
  return report;
}

MapCoordReport verify_map_coord(const CovariateModel& model, const VectorScore& s,
                                const PredictionGrid& grid) {
  const std::size_t n = model.size();
  // Per coordinate: P(Xᵢ = a) and P(Xᵢ = a, Yᵢ = 1).
  std::vector<std::map<std::string, std::pair<Rational, Rational>>> by_value(n);
  for (const auto& a : model.support()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& cell = by_value[i][a.x[i]];
      cell.first += a.p;
      if (a.y[i]) cell.second += a.p;
    }
  }
  auto given_coordinate = [&](std::size_t i, const std::string& value) {
    const auto& cell = by_value[i].at(value);
    return Rational(cell.second / cell.first);
  };

  MapCoordReport report;
  report.condition_i = true;
  const PredictionMapping mean_map = conditional_mean_mapping(model);
  for (const auto& x : model.x_support()) {
    const RationalVector m = mean_map.apply(x);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != given_coordinate(i, x[i])) report.condition_i = false;
    }
  }

  report.condition_ii = true;
  std::map<std::string, Rational> shared;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [value, cell] : by_value[i]) {
      const Rational q = cell.second / cell.first;
      auto [it, inserted] = shared.emplace(value, q);
      if (!inserted && it->second != q) report.condition_ii = false;
    }
  }

  PredictionMapping::CoordinateTable table;
  bool factors = true;
  for (const auto& x : model.x_support()) {
    const RationalVector m = mean_map.apply(x);
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = table.emplace(x[i], m[i]);
      if (!inserted && it->second != m[i]) factors = false;
    }
  }
  report.coordinatewise_optimal = factors;
  if (factors) report.coordinatewise_mapping = PredictionMapping::coordinatewise(std::move(table));
  report.map_opt = verify_map_opt(model, s, grid);
  return report;
}

bool conditionally_independent_given_x(const CovariateModel& model) {
  for (const auto& x : model.x_support()) {
    const JointDistribution cond = model.conditional(x);
    const ProductDistribution product(marginal_functional(cond));
    if (!(product.expand() == cond)) return false;
  }
  return true;
}

}  // namespace rankprop
