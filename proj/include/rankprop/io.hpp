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

#ifndef RANKPROP_IO_HPP_
#define RANKPROP_IO_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rankprop/distribution.hpp"
#include "rankprop/kernels.hpp"
#include "rankprop/mapping.hpp"
#include "rankprop/propriety.hpp"
#include "rankprop/rational.hpp"
#include "rankprop/theoretical.hpp"

namespace rankprop {

using Json = nlohmann::json;

// Throws ParseError carrying the byte offset of the failure.
Json parse_json_text(std::string_view text);
Json read_json_file(const std::string& path);

// Accepts "a/b" and decimal strings, and JSON numbers. Non-integral numbers
// are read through their shortest round-trip decimal form, so 0.3 becomes
// 3/10.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

using DistributionSpec = std::variant<JointDistribution, ProductDistribution, MixtureDistribution>;

// {"n":..,"support":[{"y":[..],"p":".."}]}, {"product":[..]} or
// {"mixture":[{"w":"..","product":[..]}]}.
DistributionSpec distribution_from_json(const Json& value);
Json distribution_to_json(const DistributionSpec& spec);
JointDistribution to_joint(const DistributionSpec& spec, std::size_t cap = kDefaultExpansionCap);

Json certificate_to_json(const ProprietyCertificate& cert);

GroupedMixtureSpec grouped_spec_from_json(const Json& value);
Json grouped_spec_to_json(const GroupedMixtureSpec& spec);

PairModel pair_model_from_json(const Json& value);
Json pair_model_to_json(const PairModel& model);
ScalarMap scalar_map_from_json(const Json& value);
Json scalar_map_to_json(const ScalarMap& map);

// Joint distribution format with an added "x" tuple on every atom.
CovariateModel covariate_model_from_json(const Json& value);
Json covariate_model_to_json(const CovariateModel& model);

// Competition submission: CSV with header "id,prediction,outcome".
struct Submission {
  std::vector<std::string> ids;
  RationalVector predictions;
  OutcomeVector outcomes;
};

// Throws ParseError whose position() is the 1-based line number.
Submission parse_submission_csv(std::istream& in);

}  // namespace rankprop

#endif  // RANKPROP_IO_HPP_
