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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

// Runs the installed binary with stderr folded in or dropped.
RunResult run(const std::string& args, bool keep_stderr = false) {
    std::string cmd = std::string(MULTISEC_BIN) + " " + args +
                      (keep_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kParabolaChart =
    R"({"name": "parabola-chart", "variables": ["x1", "z"], "generators": ["x1 - z^2"]})";

}  // namespace

TEST_CASE("gallery list prints the catalog") {
    auto r = run("gallery list");
    CHECK(r.code == 0);
    CHECK(r.out.find("twisted-cubic: degree 3 rational normal curve in P^3") != std::string::npos);
    CHECK(r.out.find("projected-veronese-p4") != std::string::npos);
    CHECK(r.out.find("random-ci(") != std::string::npos);
}

TEST_CASE("section equations in both charts") {
    auto in = write_temp("parabola.json", kParabolaChart);

    SUBCASE("standard chart") {
        auto r = run("oh-eqs --input " + in + " --profile 2");
        CHECK(r.code == 0);
        CHECK(r.out ==
              "name: parabola-chart\n"
              "field: Q\n"
              "chart: standard\n"
              "profile: (2)\n"
              "variables: u1 v1 z1\n"
              "expected dimension: 1\n"
              "g1.h0: z1^2 + v1\n"
              "g1.h1: u1 - 2*z1\n");
    }

    SUBCASE("star chart") {
        auto r = run("oh-eqs --input " + in + " --profile 1,1 --star 3");
        CHECK(r.code == 0);
        CHECK(r.out ==
              "name: parabola-chart\n"
              "field: Q\n"
              "chart: star b=3\n"
              "profile: (1,1)\n"
              "variables: u1 z1 z2\n"
              "expected dimension: 1\n"
              "g1.h0: z1*z2 - 3*u1\n"
              "g1.h1: u1 - z1 - z2\n");
    }
}

TEST_CASE("smoothness verdict report") {
    auto in = write_temp("parabola2.json", kParabolaChart);

    SUBCASE("standard chart") {
        auto r = run("smooth-at --input " + in + " --profile 2 --points 0 --seed 7");
        CHECK(r.code == 0);
        json doc = json::parse(r.out);
        CHECK(doc.at("command") == "smooth-at");
        CHECK(doc.at("chart") == "standard");
        CHECK(doc.at("agree") == true);
        CHECK(doc.at("profile") == "(2)");
        CHECK(doc.at("seed") == 7);
        CHECK(doc.at("points") == json::array({"0"}));
        CHECK(doc.at("verdict").at("smooth") == true);
        CHECK(doc.at("verdict").at("rank") == 1);
        CHECK(doc.at("verdict").at("expected_dim") == 1);
        CHECK(doc.at("oracle").at("smooth") == true);
        CHECK(doc.at("oracle").at("rank") == 2);
        CHECK(doc.at("cotangent").at("rows") == json::array({json::array({"0", "-1"})}));
        CHECK(doc.at("cotangent").at("index") == json::array({"g1.a1.s0"}));
        CHECK(doc.at("cotangent").at("orders") == json::array({2}));
        CHECK(doc.at("cotangent").at("leading_conditions") == json::array({1}));
    }

    SUBCASE("star chart carries the base point") {
        auto r = run("smooth-at --input " + in + " --profile 2 --points 0 --star 1 --seed 7");
        CHECK(r.code == 0);
        json doc = json::parse(r.out);
        CHECK(doc.at("chart") == "star");
        CHECK(doc.at("b") == "1");
        CHECK(doc.at("agree") == true);
        CHECK(doc.at("verdict").at("expected_dim") == 0);
    }
}

TEST_CASE("census reports and exit codes") {
    SUBCASE("clean census exits zero") {
        auto r = run("census --builtin twisted-cubic --primes 7 --seed 3");
        CHECK(r.code == 0);
        json doc = json::parse(r.out);
        CHECK(doc.at("route") == "implicit");
        CHECK(doc.at("source") == "builtin:twisted-cubic");
        auto& per = doc.at("per_prime");
        REQUIRE(per.size() == 1);
        CHECK(per[0].at("p") == 7);
        CHECK(per[0].at("counts").at("lines_total") == 57);
        CHECK(per[0].at("counts").at("profiles").at("{1,1}") == 1);
        std::string beta = per[0].at("beta");
        CHECK(beta.substr(0, 1) == "[");
        REQUIRE(per[0].at("draws").size() >= 1);
        CHECK(per[0].at("draws").back().at("accepted") == true);
    }

    SUBCASE("unknown builtin lists the names") {
        auto r = run("census --builtin nope", true);
        CHECK(r.code == 2);
        CHECK(r.out.find("unknown name") != std::string::npos);
        CHECK(r.out.find("twisted-cubic") != std::string::npos);
        CHECK(r.out.find("projected-veronese-p4") != std::string::npos);
    }
}

TEST_CASE("secant cover growth") {
    auto r = run("secant-cover --builtin parabola --primes 7,11");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("command") == "secant-cover");
    CHECK(doc.at("estimate").at("dimension") == 2);
    CHECK(doc.at("estimate").at("status") == "ok");
    CHECK(doc.at("estimate").at("flagged") == false);
    auto& per = doc.at("per_prime");
    REQUIRE(per.size() == 2);
    CHECK(per[0].at("cover").at("marked") == 57);
    CHECK(per[1].at("cover").at("marked") == 133);
}

TEST_CASE("malformed input is diagnosed") {
    SUBCASE("bad polynomial text") {
        auto in = write_temp("bad_poly.json",
                             R"({"name": "bad", "variables": ["x1", "z"], "generators": ["x1 ** z"]})");
        auto r = run("oh-eqs --input " + in + " --profile 1", true);
        CHECK(r.code == 2);
        CHECK(r.out.find("unexpected character") != std::string::npos);
        CHECK(r.out.find("x1 ** z") != std::string::npos);
    }

    SUBCASE("unknown document key") {
        auto in = write_temp("bad_key.json",
                             R"({"name": "bad", "vars": ["x1", "z"], "generators": ["x1"]})");
        auto r = run("oh-eqs --input " + in + " --profile 1", true);
        CHECK(r.code == 2);
        CHECK(r.out.find("multisec:") != std::string::npos);
    }

    SUBCASE("missing file") {
        auto r = run("oh-eqs --input does_not_exist.json --profile 1", true);
        CHECK(r.code != 0);
    }
}

TEST_CASE("reports can be written to a file") {
    std::string out = "cli_census_out.json";
    std::remove(out.c_str());
    auto r = run("census --builtin twisted-cubic --primes 7 --seed 3 --out " + out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out);
    REQUIRE(f.good());
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    json doc = json::parse(content);
    CHECK(doc.at("config").at("out") == out);
    CHECK(doc.at("per_prime")[0].at("counts").at("lines_total") == 57);
}

TEST_CASE("replays are byte identical") {
    auto a = run("census --builtin twisted-cubic --primes 7,11 --seed 11");
    auto b = run("census --builtin twisted-cubic --primes 7,11 --seed 11");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    CHECK_NOTHROW(nlohmann::json::parse(a.out));

    auto c = run("census --builtin twisted-cubic --primes 7,11 --seed 12");
    CHECK(c.out != a.out);  // the seed is part of the protocol
}
