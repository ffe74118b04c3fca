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
#include <cstdint>

#include "doctest.h"
#include "multisec/census.hpp"
#include "multisec/gallery.hpp"
#include "multisec/poly_text.hpp"

using namespace multisec;

namespace {

std::vector<Fp> pt(const PrimeField& F, std::vector<std::int64_t> coords) {
    std::vector<Fp> out;
    for (auto v : coords) out.push_back(F.make(v));
    return out;
}

}  // namespace

TEST_CASE("catalog entries are well formed") {
    auto catalog = builtin_catalog();
    CHECK(catalog.size() >= 6);
    for (const auto& [name, summary] : catalog) {
        CHECK_FALSE(summary.empty());
        if (name.find('(') != std::string::npos) continue;  // parametrized family pattern
        auto b = builtin(name);
        CHECK(b.name == name);
        CHECK((bool(b.implicit) || bool(b.parametric)));
        if (b.implicit) {
            CHECK_NOTHROW(b.implicit->validate());
            CHECK(int(b.implicit->gens.size()) >= b.implicit->codim);
        }
        if (b.parametric) {
            CHECK_NOTHROW(b.parametric->validate());
            CHECK(int(b.parametric->comps.size()) == b.parametric->N + 1);
        }
    }
}

TEST_CASE("unknown names report the available catalog") {
    CHECK_THROWS_WITH(builtin("nope"), doctest::Contains("unknown name"));
    CHECK_THROWS_WITH(builtin("nope"), doctest::Contains("twisted-cubic"));
}

TEST_CASE("seeded complete intersections") {
    auto b = builtin("random-ci(3,2,2,5)");
    REQUIRE(bool(b.implicit));
    const auto& X = *b.implicit;
    CHECK(X.N == 3);
    CHECK(X.codim == 2);
    REQUIRE(X.gens.size() == 2);
    for (const auto& g : X.gens) {
        auto d = g.homogeneous_degree();
        REQUIRE(bool(d));
        CHECK(*d == 2);
    }

    SUBCASE("same name, same ideal") {
        auto again = builtin("random-ci(3,2,2,5)");
        REQUIRE(again.implicit->gens.size() == 2);
        CHECK(again.implicit->gens[0] == X.gens[0]);
        CHECK(again.implicit->gens[1] == X.gens[1]);
    }

    SUBCASE("seed changes the ideal") {
        auto other = builtin("random-ci(3,2,2,6)");
        CHECK_FALSE(other.implicit->gens[0] == X.gens[0]);
    }

    SUBCASE("malformed requests") {
        CHECK_THROWS_WITH(builtin("random-ci(3,2)"), doctest::Contains("seed"));
        CHECK_THROWS_WITH(builtin("random-ci(x,2,3)"), doctest::Contains("bad number"));
        CHECK_THROWS_WITH(builtin("random-ci(1,2,3)"), doctest::Contains("out of range"));
        CHECK_THROWS_WITH(builtin("random-ci(3,9,3)"), doctest::Contains("degree out of range"));
        CHECK_THROWS_WITH(builtin("random-ci(3,2,2,2,3)"), doctest::Contains("too many degrees"));
    }
}

TEST_CASE("parametric image basics") {
    auto b = builtin("twisted-cubic");
    REQUIRE(bool(b.parametric));
    auto f = reduce_mod(*b.parametric, 7);
    auto X = reduce_mod(*b.implicit, 7);

    auto img = rational_image(f);
    CHECK(img.size() == 8);  // injective on P^1(F_7)
    for (const auto& x : img) {
        CHECK(on_image(f, x));
        CHECK(on_variety(X, x));
    }
    CHECK_FALSE(on_image(f, pt(f.F, {1, 0, 0, 1})));

    auto at = image_point(f, pt(f.F, {1, 2}));
    CHECK(at == pt(f.F, {1, 4, 1, 2}));  // (1, t^2, t^3, t) at t = 2 mod 7
}

TEST_CASE("rational curves classify lines the same way in both presentations") {
    struct Case {
        const char* name;
        std::int64_t p;
    };
    for (Case cs : {Case{"twisted-cubic", 11}, Case{"rational-normal-quartic", 5}}) {
        auto b = builtin(cs.name);
        REQUIRE(bool(b.implicit));
        REQUIRE(bool(b.parametric));
        auto X = reduce_mod(*b.implicit, cs.p);
        auto f = reduce_mod(*b.parametric, cs.p);
        auto lines = all_lines(ProjectiveSpace(cs.p, X.N));
        size_t step = lines.size() / 100 + 1;
        int compared = 0;
        for (size_t i = 0; i < lines.size(); i += step) {
            CHECK(line_profile(X, lines[i]) == parametric_line_profile(f, lines[i]));
            ++compared;
        }
        CHECK(compared >= 90);
    }
}

TEST_CASE("tangent and secant classes of the cubic agree across routes") {
    auto b = builtin("twisted-cubic");
    auto f = reduce_mod(*b.parametric, 7);
    // Tangent at the curve point (1,0,0,0), direction (0,0,0,1).
    LineSpan tangent{pt(f.F, {1, 0, 0, 0}), pt(f.F, {0, 0, 0, 1})};
    CHECK(parametric_line_profile(f, tangent) == GeometricProfile{{2}, false});
    // Chord through the curve points at t = 1 and t = 2.
    LineSpan chord{pt(f.F, {1, 1, 1, 1}), pt(f.F, {1, 4, 1, 2})};
    CHECK(parametric_line_profile(f, chord) == GeometricProfile{{1, 1}, false});
}

TEST_CASE("census of the Veronese surface through a rank three point") {
    // beta = the identity conic: not on the surface, its secant cubic, or its
    // tangent variety, so every incident line meets the surface simply.
    auto b = builtin("veronese-p5");
    auto X = reduce_mod(*b.implicit, 7);
    auto f = reduce_mod(*b.parametric, 7);
    auto beta = pt(X.F, {1, 0, 0, 1, 0, 1});
    REQUIRE_FALSE(on_variety(X, beta));

    auto counts = census_through_point(X, beta, 2);
    CHECK(counts.lines_total == (16807 - 1) / 6);  // (7^5 - 1)/(7 - 1)
    CHECK(count_with_total_at_least(counts, 2) == 0);
    CHECK(counts.contained == 0);
    REQUIRE(counts.by_profile.size() == 1);
    CHECK(counts.by_profile.at("{1}") == 57);  // one line per surface point

    auto pcounts = parametric_census(f, beta, 2);
    CHECK(pcounts.lines_total == counts.lines_total);
    CHECK(pcounts.by_profile == counts.by_profile);
    CHECK(pcounts.empty == counts.empty);
}

TEST_CASE("steiner point validation") {
    auto b = builtin("projected-veronese-p4");
    REQUIRE(bool(b.parametric));
    CHECK_FALSE(bool(b.implicit));
    auto f = reduce_mod(*b.parametric, 11);

    Rng rng(2026);
    std::vector<BetaDraw> log;
    auto beta = draw_steiner_point(f, rng, log);
    auto check = steiner_generic(f, beta);
    CHECK(check.ok);
    CHECK(check.reason.empty());
    REQUIRE(check.tangency_sources.size() == 6);

    // Every rejected draw carries a reason.
    for (const auto& d : log)
        if (!d.accepted) CHECK_FALSE(d.reason.empty());

    SUBCASE("each tangency line meets the surface in one double point") {
        for (const auto& s : check.tangency_sources) {
            LineSpan line{beta, image_point(f, s)};
            CHECK(parametric_line_profile(f, line) == GeometricProfile{{2}, false});
        }
    }

    SUBCASE("an image point is rejected") {
        auto on = image_point(f, pt(f.F, {1, 2, 3}));
        auto bad = steiner_generic(f, on);
        CHECK_FALSE(bad.ok);
        CHECK_FALSE(bad.reason.empty());
    }

    SUBCASE("the six tangencies census as the double class") {
        auto counts = parametric_census(f, beta);
        CHECK(count_profile(counts, {2}) == 6);
        CHECK(count_profile(counts, {1, 1, 1}) == 1);
        CHECK(count_profile(counts, {2, 1}) == 0);
    }
}

TEST_CASE("census commutes with a coordinate swap") {
    auto b = builtin("projected-veronese-p4");
    auto f = reduce_mod(*b.parametric, 11);
    Rng rng(777);
    std::vector<BetaDraw> log;
    auto beta = draw_steiner_point(f, rng, log);

    // Swap the last two target coordinates: a projective automorphism.
    FpParametric g = f;
    std::swap(g.comps[3], g.comps[4]);
    auto gbeta = beta;
    std::swap(gbeta[3], gbeta[4]);

    auto a = parametric_census(f, beta);
    auto c = parametric_census(g, gbeta, 2);
    CHECK(a.lines_total == c.lines_total);
    CHECK(a.empty == c.empty);
    CHECK(a.contained == c.contained);
    CHECK(a.by_profile == c.by_profile);
}

TEST_CASE("smoothness spot check at rational points") {
    CHECK(smooth_at_rational_points(reduce_mod(*builtin("twisted-cubic").implicit, 7)));
    CHECK(smooth_at_rational_points(reduce_mod(*builtin("veronese-p5").implicit, 7)));

    // Nodal plane cubic: singular at (0 : 0 : 1).
    auto vars = projective_vars(2);
    ImplicitVariety nodal{"nodal-cubic", 2, 1, vars,
                          {parse_poly<Rational>("X1^2*X2 - X0^2*X2 - X0^3", vars, Rational(1))}};
    nodal.validate();
    CHECK_FALSE(smooth_at_rational_points(reduce_mod(nodal, 7)));
}
