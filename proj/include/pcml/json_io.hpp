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

#ifndef PCML_JSON_IO_HPP
#define PCML_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pcml/channels.hpp"
#include "pcml/majorization.hpp"
#include "pcml/noise.hpp"
#include "pcml/rnm.hpp"

namespace pcml {

// Round to 12 significant digits; all JSON-facing numerics go through this so
// outputs are reproducible byte-for-byte.
double round_sig12(double x);

// Noise specification: {"kind":"laplace","gamma":0.1} or
// {"kind":"gaussian","sigma":1.0}.
NoiseModel noise_from_json(const nlohmann::json& spec);
nlohmann::json noise_to_json(const NoiseModel& model);

// Channel specification:
// {"x_support":["a","b"],"y_alphabet":["0","1"],
//  "rows":{"a":[0.6,0.4],"b":[0.3,0.7]}}.
ConditionalChannel channel_from_json(const nlohmann::json& spec);

// Leakage report; set bits to also include the value converted to bits.
nlohmann::json report_to_json(const LeakageReport& report, bool bits = false);

nlohmann::json verdict_to_json(const MajorizationVerdict& verdict);

nlohmann::json load_json_file(const std::string& path);

}  // namespace pcml

#endif  // PCML_JSON_IO_HPP
