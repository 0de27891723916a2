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

#include "rankprop/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rankprop/errors.hpp"

namespace rankprop {
namespace {

const Json& field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw InvalidInput(std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

const Json& array_field(const Json& object, const char* name) {
  const Json& value = field(object, name);
  if (!value.is_array()) throw InvalidInput(std::string("field '") + name + "' must be an array");
  return value;
}

OutcomeVector outcome_from_json(const Json& value) {
  if (!value.is_array()) throw InvalidInput("outcome vector must be an array of 0/1");
  std::vector<int> y;
  for (const auto& v : value) {
    if (!v.is_number_integer()) throw InvalidInput("outcome entries must be 0 or 1");
    y.push_back(v.get<int>());
  }
  return OutcomeVector::from_ints(y);
}

Json outcome_to_json(const OutcomeVector& y) {
  Json out = Json::array();
  for (std::size_t i = 0; i < y.size(); ++i) out.push_back(y[i]);
  return out;
}

RationalVector rationals_from_json(const Json& value) {
  if (!value.is_array()) throw InvalidInput("expected an array of probabilities");
  RationalVector out;
  for (const auto& v : value) out.push_back(rational_from_json(v));
  return out;
}

Json rationals_to_json(const RationalVector& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number_float()) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value.get<double>());
    if (ec != std::errc()) throw InvalidInput("cannot format number");
    return parse_rational(std::string_view(buffer, static_cast<std::size_t>(end - buffer)));
  }
  throw InvalidInput("expected a rational such as \"3/10\" or a number");
}

Json rational_to_json(const Rational& value) { return to_string(value); }

DistributionSpec distribution_from_json(const Json& value) {
  if (!value.is_object()) throw InvalidInput("distribution must be a JSON object");
  if (value.contains("product")) {
    return ProductDistribution(rationals_from_json(value.at("product")));
  }
  if (value.contains("mixture")) {
    std::vector<MixtureDistribution::Component> components;
    for (const auto& c : array_field(value, "mixture")) {
      components.push_back({rational_from_json(field(c, "w")),
                            ProductDistribution(rationals_from_json(field(c, "product")))});
    }
    return MixtureDistribution(std::move(components));
  }
  const Json& n_value = field(value, "n");
  if (!n_value.is_number_unsigned()) throw InvalidInput("field 'n' must be a positive integer");
  std::vector<Atom> atoms;
  for (const auto& a : array_field(value, "support")) {
    atoms.push_back({outcome_from_json(field(a, "y")), rational_from_json(field(a, "p"))});
  }
  return JointDistribution::from_atoms(n_value.get<std::size_t>(), std::move(atoms));
}

Json distribution_to_json(const DistributionSpec& spec) {
  struct Visitor {
    Json operator()(const JointDistribution& d) const {
      Json support = Json::array();
      for (const auto& a : d.support()) {
        support.push_back({{"y", outcome_to_json(a.y)}, {"p", rational_to_json(a.p)}});
      }
      return {{"n", d.size()}, {"support", std::move(support)}};
    }
    Json operator()(const ProductDistribution& d) const {
      return {{"product", rationals_to_json(d.marginals())}};
    }
    Json operator()(const MixtureDistribution& d) const {
      Json components = Json::array();
      for (const auto& c : d.components()) {
        components.push_back({{"w", rational_to_json(c.weight)},
                              {"product", rationals_to_json(c.product.marginals())}});
      }
      return {{"mixture", std::move(components)}};
    }
  };
  return std::visit(Visitor{}, spec);
}

JointDistribution to_joint(const DistributionSpec& spec, std::size_t cap) {
  struct Visitor {
    std::size_t cap;
    JointDistribution operator()(const JointDistribution& d) const { return d; }
    JointDistribution operator()(const ProductDistribution& d) const { return d.expand(cap); }
    JointDistribution operator()(const MixtureDistribution& d) const { return d.expand(cap); }
  };
  return std::visit(Visitor{cap}, spec);
}

Json certificate_to_json(const ProprietyCertificate& cert) {
  Json out = {
      {"kernel", cert.kernel},
      {"distribution", distribution_to_json(cert.distribution)},
      {"verdict", std::string(verdict_name(cert.verdict))},
      {"exact_rank", cert.exact_rank.to_string()},
      {"sigma_rank", cert.sigma_rank.to_string()},
  };
  if (cert.witness) {
    out["witness"] = cert.witness->to_string();
    out["witness_score"] = rational_to_json(*cert.witness_score);
    out["beating"] = cert.beating->to_string();
    out["beating_score"] = rational_to_json(*cert.beating_score);
    out["witness_suboptimal"] = cert.witness_suboptimal();
  }
  return out;
}

GroupedMixtureSpec grouped_spec_from_json(const Json& value) {
  std::vector<GroupedMixtureSpec::Group> groups;
  for (const auto& g : array_field(value, "groups")) {
    const Json& size = field(g, "size");
    if (!size.is_number_unsigned()) throw InvalidInput("group size must be a positive integer");
    std::string label = g.contains("label") ? g.at("label").get<std::string>() : std::string();
    groups.push_back({size.get<std::size_t>(), std::move(label)});
  }
  std::vector<GroupedMixtureSpec::Component> components;
  for (const auto& c : array_field(value, "components")) {
    components.push_back({rational_from_json(field(c, "w")), rationals_from_json(field(c, "p"))});
  }
  return GroupedMixtureSpec(std::move(groups), std::move(components));
}

Json grouped_spec_to_json(const GroupedMixtureSpec& spec) {
  Json groups = Json::array();
  for (const auto& g : spec.groups()) groups.push_back({{"size", g.size}, {"label", g.label}});
  Json components = Json::array();
  for (const auto& c : spec.components()) {
    components.push_back({{"w", rational_to_json(c.weight)}, {"p", rationals_to_json(c.probabilities)}});
  }
  return {{"groups", std::move(groups)}, {"components", std::move(components)}};
}

PairModel pair_model_from_json(const Json& value) {
  std::vector<PairModel::Atom> atoms;
  for (const auto& a : array_field(value, "support")) {
    const Json& y = field(a, "y");
    if (!y.is_number_integer()) throw InvalidInput("pair model 'y' must be 0 or 1");
    atoms.push_back({field(a, "x").get<std::string>(), y.get<int>(), rational_from_json(field(a, "p"))});
  }
  return PairModel(std::move(atoms));
}

Json pair_model_to_json(const PairModel& model) {
  Json support = Json::array();
  for (const auto& a : model.support()) {
    support.push_back({{"x", a.x}, {"y", a.y}, {"p", rational_to_json(a.p)}});
  }
  return {{"support", std::move(support)}};
}

ScalarMap scalar_map_from_json(const Json& value) {
  const Json& table = field(value, "f");
  if (!table.is_object()) throw InvalidInput("field 'f' must be an object");
  std::map<std::string, Rational> values;
  for (const auto& [key, v] : table.items()) values.emplace(key, rational_from_json(v));
  return ScalarMap(std::move(values));
}

Json scalar_map_to_json(const ScalarMap& map) {
  Json table = Json::object();
  for (const auto& [key, v] : map.values()) table[key] = rational_to_json(v);
  return {{"f", std::move(table)}};
}

CovariateModel covariate_model_from_json(const Json& value) {
  const Json& n_value = field(value, "n");
  if (!n_value.is_number_unsigned()) throw InvalidInput("field 'n' must be a positive integer");
  std::vector<CovariateModel::Atom> atoms;
  for (const auto& a : array_field(value, "support")) {
    CovariateTuple x;
    for (const auto& v : array_field(a, "x")) x.push_back(v.get<std::string>());
    atoms.push_back({std::move(x), outcome_from_json(field(a, "y")), rational_from_json(field(a, "p"))});
  }
  return CovariateModel::from_atoms(n_value.get<std::size_t>(), std::move(atoms));
}

Json covariate_model_to_json(const CovariateModel& model) {
  Json support = Json::array();
  for (const auto& a : model.support()) {
    support.push_back({{"x", a.x}, {"y", outcome_to_json(a.y)}, {"p", rational_to_json(a.p)}});
  }
  return {{"n", model.size()}, {"support", std::move(support)}};
}

Submission parse_submission_csv(std::istream& in) {
  Submission sub;
  std::vector<int> outcomes;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (!header_seen) {
      if (cells != std::vector<std::string>{"id", "prediction", "outcome"}) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected header 'id,prediction,outcome'",
                         line_no);
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields, found " +
                           std::to_string(cells.size()),
                       line_no);
    }
    try {
      sub.predictions.push_back(parse_rational(cells[1]));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    if (cells[2] != "0" && cells[2] != "1") {
      throw ParseError("line " + std::to_string(line_no) + ": outcome must be 0 or 1, found '" +
                           cells[2] + "'",
                       line_no);
    }
    sub.ids.push_back(cells[0]);
    outcomes.push_back(cells[2] == "1" ? 1 : 0);
  }
  if (!header_seen) throw ParseError("empty submission: missing header", line_no);
  if (outcomes.empty()) throw ParseError("submission has no rows", line_no);
  sub.outcomes = OutcomeVector::from_ints(outcomes);
  return sub;
}

}  // namespace rankprop
