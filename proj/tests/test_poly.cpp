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
#include "multisec/factor.hpp"
#include "multisec/mpoly.hpp"
#include "multisec/poly_text.hpp"
#include "multisec/rng.hpp"
#include "multisec/upoly.hpp"

using namespace multisec;

namespace {

MPoly<Rational> q(const std::string& text, const VarSetPtr& vars) {
    return parse_poly<Rational>(text, vars, Rational(1));
}

UPoly<Fp> up(const PrimeField& F, std::vector<std::int64_t> coeffs) {
    std::vector<Fp> c;
    for (auto v : coeffs) c.push_back(F.make(v));
    return UPoly<Fp>(std::move(c));
}

UPoly<Fp> random_upoly(const PrimeField& F, Rng& rng, int maxdeg) {
    std::vector<Fp> c;
    int d = int(rng.below(std::uint64_t(maxdeg + 1)));
    for (int i = 0; i <= d; ++i) c.push_back(F.make(rng.int_in(0, F.p() - 1)));
    return UPoly<Fp>(std::move(c));
}

}  // namespace

TEST_CASE("multivariate arithmetic and evaluation") {
    auto vars = make_varset({"x", "y"});
    auto sum = q("x + y", vars);
    auto f = sum * sum;
    auto g = q("x^2 + 2*x*y + y^2", vars);
    CHECK(f == g);
    CHECK(f.eval({Rational(2), Rational(3)}) == Rational(25));
    CHECK(q("x^2 - y^2", vars) == q("x - y", vars) * q("x + y", vars));
    CHECK((f - g).is_zero());
    // The text grammar is plain sums of monomials; grouping is not part of it.
    CHECK_THROWS(q("(x + y)^2", vars));
}

TEST_CASE("derivatives follow the calculus table") {
    auto vars = make_varset({"x", "y"});
    auto f = q("x^3*y + 2*x*y^2 - 5", vars);
    CHECK(f.derivative(0) == q("3*x^2*y + 2*y^2", vars));
    CHECK(f.derivative(1) == q("x^3 + 4*x*y", vars));
    CHECK(f.derivative(0).derivative(1) == q("3*x^2 + 4*y", vars));
    CHECK(f.derivative(1, 2) == q("4*x", vars));
    CHECK(f.derivative(0, 4).is_zero());
}

TEST_CASE("homogeneous degree detection") {
    auto vars = make_varset({"x", "y", "z"});
    CHECK(q("x^2*y + z^3", vars).homogeneous_degree() == 3);
    CHECK(!q("x^2 + z^3", vars).homogeneous_degree());
    CHECK(q("x*y - z^2", vars).homogeneous_degree() == 2);
}

TEST_CASE("substitution composes polynomials") {
    auto vars = make_varset({"x", "z"});
    auto f = q("x^2 - z", vars);
    std::vector<std::optional<MPoly<Rational>>> targets(2);
    targets[0] = q("z + 1", vars);  // x -> z + 1
    CHECK(f.substitute(targets, vars) == q("z^2 + z + 1", vars));
}

TEST_CASE("printing and parsing round trip on random rational polynomials") {
    auto vars = make_varset({"x1", "x2", "z"});
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        MPoly<Rational> f(vars);
        int terms = int(rng.below(6));
        for (int t = 0; t < terms; ++t) {
            Exp e{int(rng.below(4)), int(rng.below(3)), int(rng.below(4))};
            f.add_term(e, Rational(rng.int_in(-9, 9), rng.int_in(1, 4)));
        }
        if (f.is_zero()) continue;
        auto back = parse_poly<Rational>(print_poly(f), vars, Rational(1));
        CHECK(back == f);
    }
}

TEST_CASE("printing and parsing round trip over a prime field") {
    PrimeField F(13);
    auto vars = make_varset({"x1", "z"});
    Rng rng(55);
    for (int i = 0; i < 60; ++i) {
        MPoly<Fp> f(vars);
        int terms = 1 + int(rng.below(5));
        for (int t = 0; t < terms; ++t)
            f.add_term(Exp{int(rng.below(4)), int(rng.below(4))}, F.make(rng.int_in(0, 12)));
        if (f.is_zero()) continue;
        CHECK(parse_poly<Fp>(print_poly(f), vars, F.make(1)) == f);
    }
}

TEST_CASE("parse errors carry the offending position") {
    auto vars = make_varset({"x", "y"});
    CHECK_THROWS_WITH_AS(q("x + ", vars), doctest::Contains("at position"), parse_error);
    CHECK_THROWS_WITH_AS(q("x + w", vars), doctest::Contains("unknown variable"), parse_error);
    CHECK_THROWS_AS(q("", vars), parse_error);
    CHECK_THROWS_AS(q("x ** y", vars), parse_error);
}

TEST_CASE("univariate division is exact on constructed multiples") {
    PrimeField F(11);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        UPoly<Fp> a = random_upoly(F, rng, 6);
        UPoly<Fp> b = random_upoly(F, rng, 4);
        if (b.is_zero()) continue;
        auto [quo, rem] = divrem(a, b);
        CHECK(quo * b + rem == a);
        CHECK((rem.is_zero() || rem.degree() < b.degree()));
        UPoly<Fp> prod = a * b;
        if (!a.is_zero()) CHECK(divide_exact(prod, b) == a);
    }
}

TEST_CASE("a value is a root exactly when the linear factor divides") {
    PrimeField F(7);
    Rng rng(9);
    for (int i = 0; i < 60; ++i) {
        UPoly<Fp> f = random_upoly(F, rng, 5);
        if (f.is_zero()) continue;
        for (std::int64_t v = 0; v < 7; ++v) {
            Fp a = F.make(v);
            UPoly<Fp> lin({F.make((7 - v) % 7), F.make(1)});  // z - a
            bool root = f.eval(a).is_zero();
            CHECK(root == divrem(f, lin).second.is_zero());
            if (root) CHECK(order_at(f, a) >= 1);
        }
    }
}

TEST_CASE("monic gcd divides both inputs and is reached by the chain") {
    PrimeField F(5);
    Rng rng(17);
    for (int i = 0; i < 80; ++i) {
        UPoly<Fp> a = random_upoly(F, rng, 5);
        UPoly<Fp> b = random_upoly(F, rng, 5);
        if (a.is_zero() || b.is_zero()) continue;
        UPoly<Fp> g = gcd_monic(a, b);
        CHECK(divrem(a, g).second.is_zero());
        CHECK(divrem(b, g).second.is_zero());
        CHECK(g.lc().r == 1);
        auto eg = egcd(a, b);
        CHECK(eg.u * a + eg.v * b == eg.g);
        CHECK(eg.g == g);
    }
}

TEST_CASE("order_at counts the exact vanishing order") {
    PrimeField F(7);
    // z^2 (z - 1)^3
    UPoly<Fp> f = up(F, {0, 0, 1});
    UPoly<Fp> lin = up(F, {6, 1});  // z - 1
    f = f * lin * lin * lin;
    CHECK(order_at(f, F.make(0)) == 2);
    CHECK(order_at(f, F.make(1)) == 3);
    CHECK(order_at(f, F.make(2)) == 0);
}

TEST_CASE("factor profile of a constructed product") {
    PrimeField F(7);
    // f = z^2 (z-1)^3 (z^2 + 1), with z^2 + 1 irreducible over F_7
    UPoly<Fp> f = up(F, {0, 0, 1}) * up(F, {6, 1}) * up(F, {6, 1}) * up(F, {6, 1}) * up(F, {1, 0, 1});
    FactorProfile fp = factor_profile(f);
    FactorProfile want{{1, 2}, {1, 3}, {2, 1}};
    CHECK(fp == want);
}

TEST_CASE("squarefree decomposition handles p-th powers") {
    PrimeField F(3);
    // (z - 1)^3 = z^3 - 1 over F_3: derivative vanishes, needs the p-th root step
    UPoly<Fp> f = up(F, {2, 0, 0, 1});
    FactorProfile fp = factor_profile(f);
    FactorProfile want{{1, 3}};
    CHECK(fp == want);
}

TEST_CASE("factor profile multiplies degrees correctly on random samples") {
    PrimeField F(5);
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        UPoly<Fp> f = random_upoly(F, rng, 8);
        if (f.is_zero() || f.degree() == 0) continue;
        FactorProfile fp = factor_profile(f);
        int total = 0;
        for (const auto& e : fp) total += e.degree * e.multiplicity;
        CHECK(total == f.degree());
    }
}

TEST_CASE("roots_by_scan agrees with factor data") {
    PrimeField F(11);
    std::vector<Fp> elems;
    for (std::int64_t t = 0; t < 11; ++t) elems.push_back(F.make(t));
    UPoly<Fp> f = up(F, {0, 1}) * up(F, {10, 1}) * up(F, {10, 1}) * up(F, {1, 0, 1});
    auto roots = roots_by_scan(f, elems);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first.r == 0);
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first.r == 1);
    CHECK(roots[1].second == 2);
}

TEST_CASE("binary gcd tracks the point at infinity") {
    PrimeField F(7);
    // z^2 of formal degree 3 and z of formal degree 2: each drops degree by
    // one, so each carries the point at infinity once.
    BinaryForm<Fp> a{up(F, {0, 0, 1}), 3};
    BinaryForm<Fp> b{up(F, {0, 1}), 2};
    BinaryForm<Fp> g = binary_gcd(a, b);
    CHECK(g.f == up(F, {0, 1}));
    CHECK(g.deg == 2);  // z = 0 once plus infinity once
    FactorProfile fp = binary_factor_profile(g);
    FactorProfile want{{1, 1}, {1, 1}};
    CHECK(fp == want);

    // No shared weight at infinity when one form has full degree.
    BinaryForm<Fp> c{up(F, {0, 0, 0, 1}), 3};  // z^3, no drop
    BinaryForm<Fp> h = binary_gcd(a, c);
    CHECK(h.f == up(F, {0, 0, 1}));
    CHECK(h.deg == 2);
    FactorProfile hp = binary_factor_profile(h);
    FactorProfile hwant{{1, 2}};  // z = 0 twice only
    CHECK(hp == hwant);
}

TEST_CASE("binary gcd of coprime forms is trivial") {
    PrimeField F(7);
    BinaryForm<Fp> a{up(F, {1, 1}), 1};
    BinaryForm<Fp> b{up(F, {2, 1}), 1};
    BinaryForm<Fp> g = binary_gcd(a, b);
    CHECK(g.f.degree() == 0);
    CHECK(g.deg == 0);
}

TEST_CASE("rem_mod_product splits coefficients against an aligned modulus") {
    // g = x z + z^3 mod (z - z1)^2: remainder h0 + h1 z with symbolic z1
    auto vars = make_varset({"x", "z", "z1"});
    auto g = q("x*z + z^3", vars);
    auto h = rem_mod_product(g, 1, {2}, {2}, Rational(1));
    REQUIRE(h.size() == 2);
    // taylor at z1: g = (x z1 + z1^3) + (x + 3 z1^2)(z - z1) + ...
    // h1 = x + 3 z1^2, h0 = g(z1) - z1 h1 = -2 z1^3
    CHECK(h[1] == q("x + 3*z1^2", vars));
    CHECK(h[0] == q("-2*z1^3", vars));
}

TEST_CASE("rem_mod_product leaves low-degree polynomials alone") {
    auto vars = make_varset({"x", "z", "z1", "z2"});
    auto g = q("x + z", vars);
    auto h = rem_mod_product(g, 1, {2, 3}, {1, 1}, Rational(1));
    REQUIRE(h.size() == 2);
    CHECK(h[0] == q("x", vars));
    CHECK(h[1] == q("1", vars));
}
