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

#ifndef RANKPROP_PREORDER_HPP_
#define RANKPROP_PREORDER_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankprop/rational.hpp"

namespace rankprop {

// A total preorder on the indices {0, ..., n-1}, stored as an ordered
// partition: equivalence classes listed from lowest to highest. Indices
// inside a class are sorted, so equality is structural.
//
// Indices are 0-based in the API. The text form ("[4][3][1,2]") is 1-based.
class TotalPreorder {
 public:
  using Index = std::size_t;
  using Class = std::vector<Index>;

  // Throws InvalidInput unless `classes` partition {0..n-1} into non-empty
  // classes.
  static TotalPreorder from_classes(std::vector<Class> classes);

  // `levels[i]` is the class position of index i. The set of levels used must
  // be exactly {0, ..., k-1}.
  static TotalPreorder from_levels(std::span<const std::size_t> levels);

  // Parses the 1-based text form; whitespace is ignored. Throws ParseError.
  static TotalPreorder parse(std::string_view text);

  // Every index in one class.
  static TotalPreorder full_tie(std::size_t n);

  // 0 < 1 < ... < n-1.
  static TotalPreorder chain(std::size_t n);

  std::size_t size() const { return level_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<Class>& classes() const { return classes_; }
  std::size_t level(Index i) const { return level_.at(i); }
  std::span<const std::size_t> levels() const { return level_; }

  // i ≼ j
  bool precedes_or_ties(Index i, Index j) const { return level(i) <= level(j); }
  // i ≺ j
  bool strictly_precedes(Index i, Index j) const { return level(i) < level(j); }
  // i ∼ j
  bool ties(Index i, Index j) const { return level(i) == level(j); }

  bool is_total_order() const { return classes_.size() == level_.size(); }

  // Same classes in the opposite order.
  TotalPreorder reversed() const;

  // Restriction to the indices {0, ..., m-1}, with emptied classes dropped.
  TotalPreorder restricted_to_prefix(std::size_t m) const;

  std::string to_string() const;

  friend bool operator==(const TotalPreorder& a, const TotalPreorder& b) {
    return a.classes_ == b.classes_;
  }
  friend bool operator<(const TotalPreorder& a, const TotalPreorder& b) {
    return a.classes_ < b.classes_;
  }

 private:
  TotalPreorder(std::vector<Class> classes, std::vector<std::size_t> levels)
      : classes_(std::move(classes)), level_(std::move(levels)) {}

  std::vector<Class> classes_;
  std::vector<std::size_t> level_;
};

// Net precedence counts: for each index, the number of indices strictly
// below it minus the number strictly above it. Always sums to zero.
class RankVector {
 public:
  explicit RankVector(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int64_t> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const RankVector&, const RankVector&) = default;

 private:
  std::vector<std::int64_t> values_;
};

// i ≼ j iff v[i] <= v[j], with exact tie detection. Throws InvalidInput on an
// empty vector.
TotalPreorder induce_preorder(std::span<const Rational> values);
// Converts each double exactly before comparing.
TotalPreorder induce_preorder(std::span<const double> values);

RankVector rank_vector(const TotalPreorder& preorder);

// True iff every relation i ≼ j of `inner` also holds in `outer`: inner keeps
// all of outer's strict comparisons and may only split outer's ties.
// Throws InvalidInput when the sizes differ.
bool is_contained(const TotalPreorder& inner, const TotalPreorder& outer);

inline constexpr std::size_t kDefaultEnumerationCap = 8;

namespace detail {

// Walks the ordered set partitions of m elements: a restricted growth string
// picks the set partition, then the blocks are permuted.
class OrderedPartitionCursor {
 public:
  explicit OrderedPartitionCursor(std::size_t m);

  // Local class position of element e.
  std::size_t level(std::size_t e) const { return order_[blocks_[e]]; }
  std::size_t num_levels() const { return order_.size(); }

  // Moves to the next ordered partition; false (and reset) after the last.
  bool advance();
  void reset();

 private:
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> order_;
};

}  // namespace detail

// Lazy, restartable sequence of the total preorders contained in `outer`.
// Each begin() starts a fresh, independent walk.
class PreorderRange {
 public:
  class iterator {
   public:
    using value_type = TotalPreorder;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const TotalPreorder& operator*() const { return *current_; }
    const TotalPreorder* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    friend class PreorderRange;
    explicit iterator(const TotalPreorder& outer);
    void materialize();

    std::vector<TotalPreorder::Class> outer_classes_;
    std::size_t n_ = 0;
    std::vector<detail::OrderedPartitionCursor> cursors_;
    std::optional<TotalPreorder> current_;
  };

  iterator begin() const { return iterator(outer_); }
  std::default_sentinel_t end() const { return {}; }

  std::vector<TotalPreorder> to_vector() const;
  std::size_t count() const;

 private:
  friend PreorderRange contained_set(const TotalPreorder&, std::size_t);
  explicit PreorderRange(TotalPreorder outer) : outer_(std::move(outer)) {}

  TotalPreorder outer_;
};

// All total preorders on n indices (ordered Bell number many). Throws
// ResourceLimit when n exceeds `cap` and InvalidInput when n is zero.
PreorderRange enumerate_preorders(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

// All total preorders contained in `outer`. Each tie class is expanded
// independently; throws ResourceLimit if any class is larger than `cap`.
PreorderRange contained_set(const TotalPreorder& outer,
                            std::size_t cap = kDefaultEnumerationCap);

}  // namespace rankprop

#endif  // RANKPROP_PREORDER_HPP_
