/*
   Copyright 2026 The multisec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "multisec/census.hpp"

namespace multisec {

// nlohmann::json keeps object keys sorted, so rendered reports are
// byte-stable; floating point values are serialized through format_decimal
// to keep them platform-independent.
using Json = nlohmann::json;

std::string format_decimal(double x, int places = 6);

std::string point_str(const std::vector<Fp>& pt);  // "[a:b:c]"

Json census_json(const CensusCounts& c);
Json estimate_json(const DimensionEstimate& e);
Json draws_json(const std::vector<BetaDraw>& draws);
Json sample_json(const SampleReport& r);
Json cover_json(const CoverCount& c);

// Canonical rendering: two-space indent and a trailing newline.
std::string render_report(const Json& j);

}  // namespace multisec
