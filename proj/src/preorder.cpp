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

#include "rankprop/preorder.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rankprop/errors.hpp"

namespace rankprop {

TotalPreorder TotalPreorder::from_classes(std::vector<Class> classes) {
  std::size_t n = 0;
  for (const Class& c : classes) {
    if (c.empty()) throw InvalidInput("total preorder has an empty class");
    n += c.size();
  }
  if (n == 0) throw InvalidInput("total preorder must cover at least one index");
  std::vector<std::size_t> levels(n, n);
  for (std::size_t pos = 0; pos < classes.size(); ++pos) {
    std::sort(classes[pos].begin(), classes[pos].end());
    for (Index i : classes[pos]) {
      if (i >= n) {
        throw InvalidInput("index " + std::to_string(i + 1) + " out of range for " +
                           std::to_string(n) + " indices");
      }
      if (levels[i] != n) {
        throw InvalidInput("index " + std::to_string(i + 1) + " appears twice");
      }
      levels[i] = pos;
    }
  }
  return TotalPreorder(std::move(classes), std::move(levels));
}

TotalPreorder TotalPreorder::from_levels(std::span<const std::size_t> levels) {
  const std::size_t n = levels.size();
  if (n == 0) throw InvalidInput("total preorder must cover at least one index");
  std::size_t k = *std::max_element(levels.begin(), levels.end()) + 1;
  if (k > n) throw InvalidInput("levels are not contiguous");
  std::vector<Class> classes(k);
  for (Index i = 0; i < n; ++i) classes[levels[i]].push_back(i);
  for (const Class& c : classes) {
    if (c.empty()) throw InvalidInput("levels are not contiguous");
  }
  return TotalPreorder(std::move(classes), std::vector<std::size_t>(levels.begin(), levels.end()));
}

TotalPreorder TotalPreorder::parse(std::string_view text) {
  std::vector<Class> classes;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("preorder text at offset " + std::to_string(pos) + ": " + msg, pos);
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '[') fail("expected '['");
    ++pos;
    Class current;
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unterminated class");
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected an index");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1'000'000) fail("index too large");
        ++pos;
      }
      if (value == 0) fail("indices are 1-based");
      current.push_back(value - 1);
      skip_space();
      if (pos >= text.size()) fail("unterminated class");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
    classes.push_back(std::move(current));
    skip_space();
  }
  if (classes.empty()) fail("no classes");
  try {
    return from_classes(std::move(classes));
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("preorder text: ") + e.what(), 0);
  }
}

TotalPreorder TotalPreorder::full_tie(std::size_t n) {
  std::vector<std::size_t> levels(n, 0);
  return from_levels(levels);
}

TotalPreorder TotalPreorder::chain(std::size_t n) {
  std::vector<std::size_t> levels(n);
  std::iota(levels.begin(), levels.end(), std::size_t{0});
  return from_levels(levels);
}

TotalPreorder TotalPreorder::reversed() const {
  std::vector<Class> classes(classes_.rbegin(), classes_.rend());
  return from_classes(std::move(classes));
}

TotalPreorder TotalPreorder::restricted_to_prefix(std::size_t m) const {
  if (m == 0 || m > size()) throw InvalidInput("restriction size out of range");
  std::vector<Class> classes;
  for (const Class& c : classes_) {
    Class kept;
    for (Index i : c) {
      if (i < m) kept.push_back(i);
    }
    if (!kept.empty()) classes.push_back(std::move(kept));
  }
  return from_classes(std::move(classes));
}

std::string TotalPreorder::to_string() const {
  std::string out;
  for (const Class& c : classes_) {
    out += '[';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ']';
  }
  return out;
}

TotalPreorder induce_preorder(std::span<const Rational> values) {
  if (values.empty()) throw InvalidInput("cannot induce a preorder from an empty vector");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::size_t> levels(values.size());
  std::size_t level = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && values[order[k - 1]] != values[order[k]]) ++level;
    levels[order[k]] = level;
  }
  return TotalPreorder::from_levels(levels);
}

TotalPreorder induce_preorder(std::span<const double> values) {
  RationalVector exact = rationals_from_doubles(values);
  return induce_preorder(std::span<const Rational>(exact));
}

RankVector rank_vector(const TotalPreorder& preorder) {
  const auto& classes = preorder.classes();
  const auto n = static_cast<std::int64_t>(preorder.size());
  std::vector<std::int64_t> rho(preorder.size());
  std::int64_t below = 0;
  for (const auto& c : classes) {
    const auto size = static_cast<std::int64_t>(c.size());
    const std::int64_t above = n - below - size;
    for (auto i : c) rho[i] = below - above;
    below += size;
  }
  return RankVector(std::move(rho));
}

bool is_contained(const TotalPreorder& inner, const TotalPreorder& outer) {
  if (inner.size() != outer.size()) {
    throw InvalidInput("containment requires preorders of equal size");
  }
  const std::size_t n = inner.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (inner.precedes_or_ties(i, j) && !outer.precedes_or_ties(i, j)) return false;
    }
  }
  return true;
}

namespace detail {

OrderedPartitionCursor::OrderedPartitionCursor(std::size_t m) : blocks_(m, 0), order_{0} {}

void OrderedPartitionCursor::reset() {
  std::fill(blocks_.begin(), blocks_.end(), 0);
  order_.assign(1, 0);
}

bool OrderedPartitionCursor::advance() {
  if (std::next_permutation(order_.begin(), order_.end())) return true;
  // Next restricted growth string: bump the rightmost position that may grow.
  std::vector<std::size_t> prefix_max(blocks_.size(), 0);
  for (std::size_t i = 1; i < blocks_.size(); ++i) {
    prefix_max[i] = std::max(prefix_max[i - 1], blocks_[i - 1]);
  }
  for (std::size_t i = blocks_.size(); i-- > 1;) {
    if (blocks_[i] <= prefix_max[i]) {
      ++blocks_[i];
      std::fill(blocks_.begin() + static_cast<std::ptrdiff_t>(i) + 1, blocks_.end(), 0);
      const std::size_t k = *std::max_element(blocks_.begin(), blocks_.end()) + 1;
      order_.resize(k);
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      return true;
    }
  }
  reset();
  return false;
}

}  // namespace detail

PreorderRange::iterator::iterator(const TotalPreorder& outer)
    : outer_classes_(outer.classes()), n_(outer.size()) {
  cursors_.reserve(outer_classes_.size());
  for (const auto& c : outer_classes_) cursors_.emplace_back(c.size());
  materialize();
}

void PreorderRange::iterator::materialize() {
  std::vector<std::size_t> levels(n_);
  std::size_t offset = 0;
  for (std::size_t c = 0; c < outer_classes_.size(); ++c) {
    const auto& members = outer_classes_[c];
    for (std::size_t e = 0; e < members.size(); ++e) {
      levels[members[e]] = offset + cursors_[c].level(e);
    }
    offset += cursors_[c].num_levels();
  }
  current_ = TotalPreorder::from_levels(levels);
}

PreorderRange::iterator& PreorderRange::iterator::operator++() {
  for (std::size_t c = cursors_.size(); c-- > 0;) {
    if (cursors_[c].advance()) {
      materialize();
      return *this;
    }
  }
  current_.reset();
  return *this;
}

std::vector<TotalPreorder> PreorderRange::to_vector() const {
  std::vector<TotalPreorder> out;
  for (const auto& p : *this) out.push_back(p);
  return out;
}

std::size_t PreorderRange::count() const {
  std::size_t total = 0;
  for (auto it = begin(); it != end(); ++it) ++total;
  return total;
}

PreorderRange enumerate_preorders(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidInput("cannot enumerate preorders on zero indices");
  if (n > cap) {
    throw ResourceLimit("enumerating total preorders on " + std::to_string(n) + " indices", cap);
  }
  return contained_set(TotalPreorder::full_tie(n), cap);
}

PreorderRange contained_set(const TotalPreorder& outer, std::size_t cap) {
  for (const auto& c : outer.classes()) {
    if (c.size() > cap) {
      throw ResourceLimit("expanding a tie class of " + std::to_string(c.size()) + " indices",
                          cap);
    }
  }
  return PreorderRange(outer);
}

}  // namespace rankprop
