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

#include "rankprop/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rankprop/errors.hpp"

namespace rankprop {
namespace {

void check_lengths(const OutcomeVector& y, std::size_t n) {
  if (y.size() != n) {
    throw InvalidInput("outcome vector has length " + std::to_string(y.size()) +
                       " but the forecast covers " + std::to_string(n) + " indices");
  }
}

void check_forecast(std::span<const Rational> forecast) {
  for (const auto& q : forecast) {
    if (q < 0 || q > 1) {
      throw InvalidInput("forecast probability " + to_string(q) + " outside [0,1]");
    }
  }
}

}  // namespace

OutcomeVector::OutcomeVector(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto v : values_) {
    if (v > 1) throw InvalidInput("outcomes must be 0 or 1");
    n1_ += v;
  }
}

OutcomeVector OutcomeVector::from_ints(std::span<const int> values) {
  std::vector<std::uint8_t> out;
  out.reserve(values.size());
  for (int v : values) {
    if (v != 0 && v != 1) throw InvalidInput("outcomes must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return OutcomeVector(std::move(out));
}

std::string OutcomeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ',';
    out += values_[i] ? '1' : '0';
  }
  return out + ")";
}

Rational ScoreKernel::score(const OutcomeVector& y, const TotalPreorder& preorder) const {
  check_lengths(y, preorder.size());
  const RankVector rho = rank_vector(preorder);
  const RationalVector weights = sigma(y);
  Rational total = g(y);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] != 0) total += weights[i] * Rational(static_cast<long>(rho[i]));
  }
  return total;
}

ScoreKernel u_kernel() {
  return ScoreKernel{
      "u",
      [](const OutcomeVector& y) {
        return ratio(static_cast<long>(y.n0() * y.n1()), 2);
      },
      [](const OutcomeVector& y) {
        RationalVector s(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) s[i] = ratio(y[i], 2);
        return s;
      },
  };
}

ScoreKernel auc_kernel(const Rational& degenerate) {
  return ScoreKernel{
      "auc",
      [degenerate](const OutcomeVector& y) {
        return y.is_degenerate() ? degenerate : default_degenerate_auc();
      },
      [](const OutcomeVector& y) {
        RationalVector s = alpha(y);
        for (auto& v : s) v /= 2;
        return s;
      },
  };
}

ScoreKernel gini_kernel(const Rational& degenerate) {
  return ScoreKernel{
      "gini",
      [degenerate](const OutcomeVector& y) {
        return y.is_degenerate() ? Rational(2 * degenerate - 1) : Rational(0);
      },
      [](const OutcomeVector& y) { return alpha(y); },
  };
}

ScoreKernel kernel_by_name(std::string_view name, const Rational& degenerate) {
  if (name == "u") return u_kernel();
  if (name == "auc") return auc_kernel(degenerate);
  if (name == "gini") return gini_kernel(degenerate);
  throw InvalidInput("unknown kernel '" + std::string(name) + "' (expected u, auc or gini)");
}

Rational wmw_u(const OutcomeVector& y, const TotalPreorder& preorder) {
  check_lengths(y, preorder.size());
  long twice_u = 0;
  long negatives_below = 0;
  for (const auto& c : preorder.classes()) {
    long pos = 0;
    long neg = 0;
    for (auto i : c) (y[i] ? pos : neg) += 1;
    twice_u += 2 * pos * negatives_below + pos * neg;
    negatives_below += neg;
  }
  return ratio(twice_u, 2);
}

RationalVector alpha(const OutcomeVector& y) {
  RationalVector out(y.size());
  if (y.is_degenerate()) return out;
  const Rational scale = ratio(1, static_cast<long>(y.n0() * y.n1()));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i]) out[i] = scale;
  }
  return out;
}

Rational auc(const OutcomeVector& y, const TotalPreorder& preorder, const Rational& degenerate) {
  check_lengths(y, preorder.size());
  if (y.is_degenerate()) return degenerate;
  Rational value = wmw_u(y, preorder) / Rational(static_cast<long>(y.n0() * y.n1()));
  return value;
}

Rational gini(const OutcomeVector& y, const TotalPreorder& preorder, const Rational& degenerate) {
  return 2 * auc(y, preorder, degenerate) - 1;
}

RocCurve roc_curve(const OutcomeVector& y, const TotalPreorder& preorder) {
  check_lengths(y, preorder.size());
  if (y.is_degenerate()) {
    throw DegenerateOutcome("ROC curve is undefined when all outcomes are equal");
  }
  const long n1 = static_cast<long>(y.n1());
  const long n0 = static_cast<long>(y.n0());
  RocCurve curve;
  curve.points.push_back({Rational(1), Rational(1)});
  long neg_through = 0;
  long pos_through = 0;
  for (const auto& c : preorder.classes()) {
    for (auto i : c) (y[i] ? pos_through : neg_through) += 1;
    curve.points.push_back({ratio(n0 - neg_through, n0), ratio(n1 - pos_through, n1)});
  }
  return curve;
}

Rational RocCurve::area() const {
  Rational total;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const auto& a = points[k - 1];
    const auto& b = points[k];
    total += (a.fpr - b.fpr) * (a.tpr + b.tpr) / 2;
  }
  return total;
}

std::string RocCurve::to_csv(bool decimal) const {
  std::string out = "fpr,tpr\n";
  for (const auto& p : points) {
    if (decimal) {
      out += to_decimal(p.fpr) + "," + to_decimal(p.tpr) + "\n";
    } else {
      out += to_string(p.fpr) + "," + to_string(p.tpr) + "\n";
    }
  }
  return out;
}

double auc_from_scores(std::span<const double> scores, const OutcomeVector& y,
                       double degenerate) {
  check_lengths(y, scores.size());
  if (y.is_degenerate()) return degenerate;
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start + 1;
    while (stop < order.size() && scores[order[stop]] == scores[order[start]]) ++stop;
    // 1-based ranks start+1 .. stop share their mean.
    const double midrank = 0.5 * static_cast<double>(start + 1 + stop);
    for (std::size_t k = start; k < stop; ++k) {
      if (y[order[k]]) positive_rank_sum += midrank;
    }
    start = stop;
  }
  const double n1 = static_cast<double>(y.n1());
  const double n0 = static_cast<double>(y.n0());
  return (positive_rank_sum - n1 * (n1 + 1) / 2) / (n0 * n1);
}

SingleOutcomeRule parse_single_outcome_rule(std::string_view name) {
  if (name == "brier") return SingleOutcomeRule::kBrier;
  if (name == "log") return SingleOutcomeRule::kLog;
  if (name == "spherical") return SingleOutcomeRule::kSpherical;
  throw InvalidInput("unknown scoring rule '" + std::string(name) + "'");
}

double marginal_score_sum(const OutcomeVector& y, std::span<const Rational> forecast,
                          SingleOutcomeRule rule) {
  check_lengths(y, forecast.size());
  check_forecast(forecast);
  double total = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double q = to_double(forecast[i]);
    const bool hit = y[i] == 1;
    switch (rule) {
      case SingleOutcomeRule::kBrier:
        total -= (y[i] - q) * (y[i] - q);
        break;
      case SingleOutcomeRule::kLog: {
        const double p = hit ? q : 1 - q;
        if (p == 0) return -std::numeric_limits<double>::infinity();
        total += std::log(p);
        break;
      }
      case SingleOutcomeRule::kSpherical:
        total += (hit ? q : 1 - q) / std::sqrt(q * q + (1 - q) * (1 - q));
        break;
    }
  }
  return total;
}

Rational brier_score_sum(const OutcomeVector& y, std::span<const Rational> forecast) {
  check_lengths(y, forecast.size());
  check_forecast(forecast);
  Rational total;
  for (std::size_t i = 0; i < y.size(); ++i) {
    Rational d = forecast[i] - y[i];
    total -= d * d;
  }
  return total;
}

}  // namespace rankprop
