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

#include "multisec/report.hpp"

#include <cstdio>

namespace multisec {

std::string format_decimal(double x, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, x);
    std::string s = buf;
    if (s.find_first_of("123456789") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

std::string point_str(const std::vector<Fp>& pt) {
    std::string s = "[";
    for (size_t i = 0; i < pt.size(); ++i) {
        if (i) s += ":";
        s += std::to_string(pt[i].r);
    }
    s += "]";
    return s;
}

Json census_json(const CensusCounts& c) {
    Json profiles = Json::object();
    for (const auto& [k, v] : c.by_profile) profiles[k] = v;
    return Json{{"lines_total", c.lines_total},
                {"empty", c.empty},
                {"contained", c.contained},
                {"profiles", profiles}};
}

Json estimate_json(const DimensionEstimate& e) {
    Json j{{"status", e.status}};
    if (e.status == "ok") {
        j["dimension"] = e.dimension;
        j["slope"] = format_decimal(e.slope);
        j["residual"] = format_decimal(e.residual);
        j["flagged"] = e.flagged;
    }
    return j;
}

Json draws_json(const std::vector<BetaDraw>& draws) {
    Json arr = Json::array();
    for (const auto& d : draws) {
        Json j{{"point", point_str(d.point)}, {"accepted", d.accepted}};
        if (!d.reason.empty()) j["reason"] = d.reason;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json sample_json(const SampleReport& r) {
    Json j{{"candidates", r.candidates},
           {"tested", r.tested},
           {"skipped", r.skipped},
           {"smooth", r.smooth}};
    if (!r.failures.empty()) j["failures"] = r.failures;
    return j;
}

Json cover_json(const CoverCount& c) {
    return Json{{"p", c.p},
                {"marked", c.marked},
                {"points_total", c.points_total},
                {"lines_total", c.lines_total}};
}

std::string render_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace multisec
