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

#ifndef RANKPROP_ERRORS_HPP_
#define RANKPROP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankprop {

// Malformed or inconsistent arguments (length mismatches, bad indices,
// probabilities that do not sum to one, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or expansion would exceed a configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// All-0 or all-1 outcome vector where a ROC curve is requested.
class DegenerateOutcome : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A verifier's precondition is not met by the supplied input.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Conditioning on a zero-probability event.
class UndefinedConditional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Text or file parse failure. `position()` is a 0-based character offset for
// inline text and a 1-based line number for CSV input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rankprop

#endif  // RANKPROP_ERRORS_HPP_
