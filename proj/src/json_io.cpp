// Copyright 2026 The pcml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcml/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pcml/errors.hpp"

namespace pcml {

double round_sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

NoiseModel noise_from_json(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw InvalidInputError("noise spec: expected an object with a \"kind\"");
  }
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "laplace") {
    if (!spec.contains("gamma")) {
      throw InvalidInputError("noise spec: laplace requires \"gamma\"");
    }
    return laplace_model(spec.at("gamma").get<double>());
  }
  if (kind == "gaussian") {
    if (!spec.contains("sigma")) {
      throw InvalidInputError("noise spec: gaussian requires \"sigma\"");
    }
    return gaussian_model(spec.at("sigma").get<double>());
  }
  throw InvalidInputError("noise spec: unknown kind \"" + kind + "\"");
}

nlohmann::json noise_to_json(const NoiseModel& model) {
  switch (model.kind()) {
    case NoiseKind::laplace:
      return {{"kind", "laplace"}, {"gamma", round_sig12(1.0 / model.scale())}};
    case NoiseKind::gaussian:
      return {{"kind", "gaussian"}, {"sigma", round_sig12(model.scale())}};
    case NoiseKind::custom:
      return {{"kind", "custom"}};
  }
  throw InternalConsistencyError("noise_to_json: unreachable kind");
}

ConditionalChannel channel_from_json(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("x_support") ||
      !spec.contains("y_alphabet") || !spec.contains("rows")) {
    throw InvalidInputError(
        "channel spec: expected x_support, y_alphabet and rows");
  }
  auto x_support = spec.at("x_support").get<std::vector<std::string>>();
  auto y_alphabet = spec.at("y_alphabet").get<std::vector<std::string>>();
  std::vector<std::vector<double>> rows;
  rows.reserve(x_support.size());
  for (const std::string& x : x_support) {
    if (!spec.at("rows").contains(x)) {
      throw InvalidInputError("channel spec: missing row for input \"" + x +
                              "\"");
    }
    rows.push_back(spec.at("rows").at(x).get<std::vector<double>>());
  }
  return ConditionalChannel(std::move(x_support), std::move(y_alphabet),
                            std::move(rows));
}

nlohmann::json report_to_json(const LeakageReport& report, bool bits) {
  nlohmann::json probs = nlohmann::json::array();
  for (double p : report.per_class_win_probs) probs.push_back(round_sig12(p));
  nlohmann::json params;
  for (const auto& [key, value] : report.parameters) {
    params[key] = round_sig12(value);
  }
  nlohmann::json out{{"value_nats", round_sig12(report.value_nats)},
                     {"method", report.method},
                     {"per_class_win_probs", probs},
                     {"error_estimate", round_sig12(report.error_estimate)},
                     {"parameters", params}};
  if (bits) out["value_bits"] = round_sig12(report.value_nats / std::log(2.0));
  return out;
}

nlohmann::json verdict_to_json(const MajorizationVerdict& verdict) {
  const char* name = nullptr;
  switch (verdict.relation) {
    case MajorizationRelation::p_majorizes_q: name = "p_majorizes_q"; break;
    case MajorizationRelation::q_majorizes_p: name = "q_majorizes_p"; break;
    case MajorizationRelation::equal: name = "equal"; break;
    case MajorizationRelation::incomparable: name = "incomparable"; break;
  }
  nlohmann::json pp = nlohmann::json::array(), pq = nlohmann::json::array();
  for (double v : verdict.prefix_sums_p) pp.push_back(round_sig12(v));
  for (double v : verdict.prefix_sums_q) pq.push_back(round_sig12(v));
  return {{"relation", name},
          {"prefix_sums_p", pp},
          {"prefix_sums_q", pq}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open JSON file: " + path);
  nlohmann::json parsed;
  try {
    in >> parsed;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("malformed JSON in " + path + ": " + e.what());
  }
  return parsed;
}

}  // namespace pcml
