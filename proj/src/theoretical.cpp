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

#include "rankprop/theoretical.hpp"

#include <set>
#include <utility>

#include "rankprop/errors.hpp"
#include "rankprop/preorder.hpp"

namespace rankprop {

PairModel::PairModel(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidInput("pair model support is empty");
  std::set<std::pair<std::string, int>> seen;
  Rational total;
  for (const auto& a : atoms_) {
    if (a.y != 0 && a.y != 1) throw InvalidInput("pair model responses must be 0 or 1");
    if (a.p <= 0) throw InvalidInput("pair model probabilities must be positive");
    if (!seen.emplace(a.x, a.y).second) {
      throw InvalidInput("pair (" + a.x + ", " + std::to_string(a.y) + ") listed twice");
    }
    total += a.p;
  }
  if (total != 1) throw InvalidInput("pair model probabilities sum to " + to_string(total));
}

Rational PairModel::class_probability(int c) const {
  Rational total;
  for (const auto& a : atoms_) {
    if (a.y == c) total += a.p;
  }
  return total;
}

const Rational& ScalarMap::operator()(const std::string& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) throw InvalidInput("mapping has no value for covariate '" + x + "'");
  return it->second;
}

Rational theoretical_auc(const PairModel& theta, const ScalarMap& f) {
  const Rational pi1 = theta.class_probability(1);
  const Rational pi0 = theta.class_probability(0);
  if (pi0 == 0 || pi1 == 0) {
    throw UndefinedConditional("theoretical AUC needs both responses to have positive probability");
  }
  Rational total;
  for (const auto& pos : theta.support()) {
    if (pos.y != 1) continue;
    for (const auto& neg : theta.support()) {
      if (neg.y != 0) continue;
      const Rational& a = f(pos.x);
      const Rational& b = f(neg.x);
      if (a > b) {
        total += pos.p * neg.p;
      } else if (a == b) {
        total += pos.p * neg.p / 2;
      }
    }
  }
  return total / (pi0 * pi1);
}

ExpectedAucIdentity verify_expected_auc_identity(const PairModel& theta, const ScalarMap& f,
                                                 std::size_t n, const Rational& degenerate,
                                                 std::size_t max_terms) {
  if (n == 0) throw InvalidInput("sample size must be positive");
  const auto& atoms = theta.support();
  std::size_t terms = 1;
  for (std::size_t k = 0; k < n; ++k) {
    terms *= atoms.size();
    if (terms > max_terms) {
      throw ResourceLimit("enumerating i.i.d. samples of " + std::to_string(n) + " pairs",
                          max_terms);
    }
  }
  for (const auto& a : atoms) f(a.x);

  ExpectedAucIdentity result;
  std::vector<std::size_t> pick(n, 0);
  std::vector<std::uint8_t> y(n);
  RationalVector scores(n);
  while (true) {
    Rational prob(1);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = atoms[pick[k]];
      prob *= a.p;
      y[k] = static_cast<std::uint8_t>(a.y);
      scores[k] = f(a.x);
    }
    const TotalPreorder ranking = induce_preorder(std::span<const Rational>(scores));
    result.lhs += prob * auc(OutcomeVector(y), ranking, degenerate);

    std::size_t k = n;
    while (k-- > 0) {
      if (++pick[k] < atoms.size()) break;
      pick[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }

  const Rational pi0n = pow(theta.class_probability(0), n);
  const Rational pi1n = pow(theta.class_probability(1), n);
  const Rational both = pi0n + pi1n;
  if (both == 1) {
    // Every sample is degenerate; tauc is undefined but carries zero weight.
    result.rhs = degenerate;
  } else {
    result.rhs = (1 - both) * theoretical_auc(theta, f) + degenerate * both;
  }
  return result;
}

}  // namespace rankprop
