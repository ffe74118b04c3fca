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
#include "doctest.h"
#include "multisec/hilbert.hpp"
#include "multisec/poly_text.hpp"
#include "multisec/rng.hpp"

using namespace multisec;

namespace {

MPoly<Rational> q(const std::string& text, const VarSetPtr& vars) {
    return parse_poly<Rational>(text, vars, Rational(1));
}

Rational qi(std::int64_t n) { return Rational(n); }

}  // namespace

TEST_CASE("profile invariants") {
    Profile pr({2, 1, 1});
    CHECK(pr.r() == 3);
    CHECK(pr.k() == 4);
    CHECK(pr.str() == "2,1,1");
    CHECK(pr == Profile({2, 1, 1}));
    CHECK_FALSE(pr == Profile({1, 2, 1}));
    CHECK_THROWS(Profile(std::vector<int>{}));
    CHECK_THROWS(Profile({1, 0}));
    CHECK_THROWS(Profile({-2}));
}

TEST_CASE("tangency equations of a conic chart") {
    // Chart pull of the parabola x1 = z^2 along x1 = u1*z + v1.
    auto vars = make_varset({"u1", "v1", "z"});
    auto g = q("u1*z + v1 - z^2", vars);

    SUBCASE("double point") {
        auto pres = oh_equations<Rational>({g}, Profile({2}), "z", qi(1));
        REQUIRE(pres.equations.size() == 2);
        CHECK(pres.labels == std::vector<std::string>{"g1.h0", "g1.h1"});
        CHECK(pres.chart_dim == 2);
        CHECK(pres.c == 1);
        CHECK(pres.expected_codim() == 2);
        CHECK(pres.expected_dim() == 1);
        REQUIRE(pres.vars->size() == 3);
        CHECK(pres.vars->name(2) == "z1");
        // g mod (z - z1)^2: z^2 = 2*z1*z - z1^2 to first order.
        CHECK(pres.equations[0] == q("v1 + z1^2", pres.vars));
        CHECK(pres.equations[1] == q("u1 - 2*z1", pres.vars));
    }

    SUBCASE("two simple points") {
        auto pres = oh_equations<Rational>({g}, Profile({1, 1}), "z", qi(1));
        REQUIRE(pres.equations.size() == 2);
        CHECK(pres.expected_dim() == 2);
        CHECK(pres.equations[0] == q("v1 + z1*z2", pres.vars));
        CHECK(pres.equations[1] == q("u1 - z1 - z2", pres.vars));
    }
}

TEST_CASE("single marked point is evaluation at that point") {
    // With profile (1) the lone equation per generator is g with z sent to z1.
    Rng rng(411);
    auto vars = make_varset({"x1", "x2", "z"});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<MPoly<Rational>> gens;
        int c = 1 + int(rng.below(2));
        for (int s = 0; s < c; ++s) {
            MPoly<Rational> g(vars);
            for (int t = 0; t < 5; ++t) {
                Exp e = {int(rng.below(3)), int(rng.below(3)), int(rng.below(4))};
                g.add_term(std::move(e), qi(rng.int_in(-4, 4)));
            }
            gens.push_back(g);
        }
        auto pres = oh_equations(gens, Profile({1}), "z", qi(1));
        REQUIRE(int(pres.equations.size()) == c);
        std::vector<Rational> chart = {qi(rng.int_in(-5, 5)), qi(rng.int_in(-5, 5))};
        Rational a = qi(rng.int_in(-5, 5));
        std::vector<Rational> at = chart;
        at.push_back(a);
        for (int s = 0; s < c; ++s) {
            std::vector<Rational> amb = chart;
            amb.push_back(a);  // z = z1
            CHECK(pres.equations[size_t(s)].eval(at) == gens[size_t(s)].eval(amb));
        }
    }
}

TEST_CASE("equation count and labels are generator major") {
    auto vars = make_varset({"u1", "v1", "z"});
    auto g1 = q("u1*z + v1 - z^2", vars);
    auto g2 = q("u1 - v1*z", vars);
    auto pres = oh_equations<Rational>({g1, g2}, Profile({2, 1}), "z", qi(1));
    REQUIRE(pres.equations.size() == 6);
    CHECK(pres.labels == std::vector<std::string>{"g1.h0", "g1.h1", "g1.h2", "g2.h0", "g2.h1",
                                                  "g2.h2"});
    CHECK(pres.expected_codim() == 6);
    CHECK(pres.expected_dim() == 2 + 2 - 6);
    CHECK(pres.k() == 3);
}

TEST_CASE("presentation input validation") {
    auto vars = make_varset({"u1", "v1", "z"});
    auto g = q("u1*z + v1 - z^2", vars);
    CHECK_THROWS_WITH(oh_equations<Rational>({}, Profile({1}), "z", qi(1)),
                      doctest::Contains("no generators"));
    CHECK_THROWS(oh_equations<Rational>({g}, Profile({1}), "w", qi(1)));
    auto other = make_varset({"u1", "w1", "z"});
    CHECK_THROWS_WITH(oh_equations<Rational>({g, q("w1", other)}, Profile({1}), "z", qi(1)),
                      doctest::Contains("disagree"));
    // A chart variable named like an alignment coordinate collides.
    auto clash = make_varset({"z1", "z"});
    CHECK_THROWS(oh_equations<Rational>({q("z1 - z", clash)}, Profile({1}), "z", qi(1)));
}

TEST_CASE("first order test at points of the scheme") {
    auto vars = make_varset({"u1", "v1", "z"});
    auto g = q("u1*z + v1 - z^2", vars);
    auto pres = oh_equations<Rational>({g}, Profile({1, 1}), "z", qi(1));

    SUBCASE("secant line of the conic") {
        // x1 = z^2 through z = 1 and z = -1: u1 = 0, v1 = 1... the line x1 = 1
        // meets the parabola where z^2 = 1.
        std::vector<Rational> pt = {qi(0), qi(1), qi(1), qi(-1)};
        auto v = jacobian_oracle(pres, pt);
        CHECK(v.smooth);
        CHECK(v.rank == 2);
        CHECK(v.expected_rank == 2);
        CHECK(v.expected_dim == 2);
    }

    SUBCASE("point off the scheme is rejected with the failing label") {
        std::vector<Rational> pt = {qi(0), qi(0), qi(1), qi(-1)};
        CHECK_THROWS_WITH(jacobian_oracle(pres, pt), doctest::Contains("not on the scheme"));
        CHECK_THROWS_WITH(jacobian_oracle(pres, pt), doctest::Contains("g1.h0"));
    }

    SUBCASE("arity mismatch") {
        std::vector<Rational> pt = {qi(0), qi(1), qi(1)};
        CHECK_THROWS_WITH(jacobian_oracle(pres, pt), doctest::Contains("arity"));
    }
}

TEST_CASE("coincident marked points merge into higher multiplicity") {
    auto vars = make_varset({"u1", "v1", "z"});
    auto g = q("u1*z + v1 - z^2", vars);

    SUBCASE("tangent line seen as a merged double point") {
        // Tangent to the parabola at z = 1: slope 2, so u1 = 2, v1 = -1.
        auto chk = merge_profile_check<Rational>({g}, Profile({1, 1}), "z", {qi(2), qi(-1)},
                                                 {qi(1), qi(1)}, qi(1));
        CHECK(chk.merged_profile == Profile({2}));
        REQUIRE(chk.merged_points.size() == 1);
        CHECK(chk.merged_points[0] == qi(1));
        CHECK(chk.split.smooth);
        CHECK(chk.merged.smooth);
        CHECK(chk.split.expected_dim == 2);
        CHECK(chk.merged.expected_dim == 1);
    }

    SUBCASE("distinct points merge to themselves") {
        auto chk = merge_profile_check<Rational>({g}, Profile({1, 1}), "z", {qi(0), qi(1)},
                                                 {qi(1), qi(-1)}, qi(1));
        CHECK(chk.merged_profile == Profile({1, 1}));
        CHECK(chk.merged_points == std::vector<Rational>{qi(1), qi(-1)});
        CHECK(chk.split.smooth == chk.merged.smooth);
    }

    SUBCASE("merge order is first occurrence") {
        // Cubic graph chart: the line u1 = 3, v1 = -2 meets x1 = z^3 in
        // (z - 1)^2 (z + 2), so the repeated point 1 comes before -2.
        auto g3 = q("u1*z + v1 - z^3", vars);
        auto chk = merge_profile_check<Rational>({g3}, Profile({1, 1, 1}), "z",
                                                 {qi(3), qi(-2)}, {qi(1), qi(-2), qi(1)}, qi(1));
        CHECK(chk.merged_profile == Profile({2, 1}));
        CHECK(chk.merged_points == std::vector<Rational>{qi(1), qi(-2)});
    }

    SUBCASE("point count must match the profile") {
        CHECK_THROWS_WITH(merge_profile_check<Rational>({g}, Profile({1, 1}), "z",
                                                        {qi(0), qi(1)}, {qi(1)}, qi(1)),
                          doctest::Contains("point count"));
    }
}

TEST_CASE("merged and split tests agree on random conic instances") {
    // For a smooth plane curve chart every coincident pair must give the same
    // smoothness verdict through either route.
    Rng rng(907);
    auto vars = make_varset({"u1", "v1", "z"});
    auto g = q("u1*z + v1 - z^2", vars);
    int agreements = 0;
    for (int trial = 0; trial < 40; ++trial) {
        // Tangent line at z = a: u1 = 2a, v1 = -a^2.
        Rational a = qi(rng.int_in(-6, 6));
        auto chk = merge_profile_check<Rational>({g}, Profile({1, 1}), "z",
                                                 {a * qi(2), -(a * a)}, {a, a}, qi(1));
        CHECK(chk.split.smooth == chk.merged.smooth);
        ++agreements;
    }
    CHECK(agreements == 40);
}
