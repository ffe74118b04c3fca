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

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "multisec/hilbert.hpp"
#include "multisec/linalg.hpp"
#include "multisec/mpoly.hpp"
#include "multisec/rng.hpp"
#include "multisec/upoly.hpp"

namespace multisec {

// Affine charts on the space of lines near {x = 0} in A^N with coordinates
// (x_1..x_{N-1}, z).  The standard chart parametrizes x_i = u_i z + v_i; the
// star chart fixes the point (0,...,0,b) and parametrizes x_i = u_i (z - b).
template <class K>
struct LineChart {
    int N = 0;  // ambient affine dimension (so N-1 transverse coordinates)
    bool star = false;
    K b{};
    VarSetPtr ambient;  // x1..x_{N-1}, z
    VarSetPtr chart;    // u1.., v1.., z  /  u1.., z  (star)
};

template <class K>
LineChart<K> make_standard_chart(int N, const std::string& line_var = "z") {
    if (N < 1) throw error("make_standard_chart: ambient dimension must be >= 1");
    LineChart<K> ch;
    ch.N = N;
    std::vector<std::string> amb;
    for (int i = 1; i < N; ++i) amb.push_back("x" + std::to_string(i));
    amb.push_back(line_var);
    ch.ambient = make_varset(amb);
    std::vector<std::string> cv;
    for (int i = 1; i < N; ++i) cv.push_back("u" + std::to_string(i));
    for (int i = 1; i < N; ++i) cv.push_back("v" + std::to_string(i));
    cv.push_back(line_var);
    ch.chart = make_varset(cv);
    return ch;
}

template <class K>
LineChart<K> make_star_chart(int N, const K& b, const std::string& line_var = "z") {
    if (N < 1) throw error("make_star_chart: ambient dimension must be >= 1");
    LineChart<K> ch;
    ch.N = N;
    ch.star = true;
    ch.b = b;
    std::vector<std::string> amb;
    for (int i = 1; i < N; ++i) amb.push_back("x" + std::to_string(i));
    amb.push_back(line_var);
    ch.ambient = make_varset(amb);
    std::vector<std::string> cv;
    for (int i = 1; i < N; ++i) cv.push_back("u" + std::to_string(i));
    cv.push_back(line_var);
    ch.chart = make_varset(cv);
    return ch;
}

// Substitutes the chart parametrization into an ambient polynomial.
template <class K>
MPoly<K> pull_to_chart(const MPoly<K>& g, const LineChart<K>& ch, const K& one) {
    if (!(*g.vars() == *ch.ambient)) throw error("pull_to_chart: generator not in ambient variables");
    const int n = ch.N - 1;
    const int zc = ch.chart->index_of(ch.ambient->name(n));  // line variable position in chart
    std::vector<std::optional<MPoly<K>>> targets(size_t(n) + 1);
    MPoly<K> zpoly = MPoly<K>::variable(ch.chart, zc, one);
    for (int i = 0; i < n; ++i) {
        MPoly<K> ui = MPoly<K>::variable(ch.chart, i, one);
        if (ch.star) {
            targets[size_t(i)] = ui * (zpoly - MPoly<K>::constant(ch.chart, ch.b));
        } else {
            MPoly<K> vi = MPoly<K>::variable(ch.chart, n + i, one);
            targets[size_t(i)] = ui * zpoly + vi;
        }
    }
    // z passes through by name
    return g.substitute(targets, ch.chart);
}

// Moves the line {x_i = u_i z + v_i} to {x = 0}: g(x, z) -> g(x + u z + v, z).
template <class K>
MPoly<K> translate_line_to_origin(const MPoly<K>& g, const std::vector<K>& u,
                                  const std::vector<K>& v, const K& one) {
    const VarSetPtr& vars = g.vars();
    const int n = vars->size() - 1;
    if (int(u.size()) != n || int(v.size()) != n)
        throw error("translate_line_to_origin: coefficient arity mismatch");
    std::vector<std::optional<MPoly<K>>> targets(size_t(n) + 1);
    MPoly<K> zp = MPoly<K>::variable(vars, n, one);
    for (int i = 0; i < n; ++i) {
        targets[size_t(i)] = MPoly<K>::variable(vars, i, one) +
                             zp * MPoly<K>::constant(vars, u[size_t(i)]) +
                             MPoly<K>::constant(vars, v[size_t(i)]);
    }
    return g.substitute(targets, vars);
}

// Restriction of an ambient generator to the line {x = 0}.
template <class K>
UPoly<K> restrict_to_line(const MPoly<K>& g, const K& /*one*/) {
    const VarSetPtr& vars = g.vars();
    const int zidx = vars->size() - 1;
    std::vector<K> c(size_t(std::max(g.degree_in(zidx), 0)) + 1, K{});
    bool nonzero = false;
    for (const auto& [e, coeff] : g.terms()) {
        bool pure = true;
        for (int i = 0; i < zidx; ++i)
            if (e[size_t(i)] != 0) { pure = false; break; }
        if (!pure) continue;
        c[size_t(e[size_t(zidx)])] = coeff;
        nonzero = true;
    }
    if (!nonzero) c.clear();
    return UPoly<K>(std::move(c));
}

// First-order data of a generator along {x = 0}:
//   g == p(z) + sum_i x_i q_i(z)  modulo (x)^2.
template <class K>
struct LinearizedGenerator {
    UPoly<K> p;
    std::vector<UPoly<K>> q;
};

template <class K>
LinearizedGenerator<K> linearize(const MPoly<K>& g, const K& one) {
    const VarSetPtr& vars = g.vars();
    const int n = vars->size() - 1;
    LinearizedGenerator<K> out;
    out.p = restrict_to_line(g, one);
    out.q.reserve(size_t(n));
    for (int i = 0; i < n; ++i) out.q.push_back(restrict_to_line(g.derivative(i), one));
    return out;
}

// Generator system arranged so that only the first generator restricts
// nontrivially to the line: g_1 restricts to the monic gcd d of the input
// restrictions, all others restrict to zero.
template <class K>
struct NormalizedSystem {
    std::vector<MPoly<K>> gens;  // ambient variables (x.., z)
    UPoly<K> d;                  // monic; the restriction of gens[0]
    int attempts = 0;            // randomized retries consumed
};

namespace detail {

// Rank of the ambient Jacobian of a system at the point (0,...,0,a).
template <class K>
int ambient_rank_at(const std::vector<MPoly<K>>& gens, const K& a) {
    const VarSetPtr& vars = gens[0].vars();
    std::vector<K> pt(size_t(vars->size()), zero_like(a));
    pt.back() = a;
    Matrix<K> jac;
    for (const auto& g : gens) {
        std::vector<K> row;
        for (int i = 0; i < vars->size(); ++i) row.push_back(g.derivative(i).eval(pt));
        jac.push_back(std::move(row));
    }
    return rank(std::move(jac));
}

}  // namespace detail

// Produces a NormalizedSystem for the marked points a_j.  The combination is
// built from an extended-gcd chain over the line restrictions; the result is
// verified by requiring ambient Jacobian rank c at every marked point where
// the input system already had rank c, with seeded shuffles on retry.
template <class K>
NormalizedSystem<K> normalize_generators(const std::vector<MPoly<K>>& gens_in,
                                         const std::vector<K>& points, Rng rng,
                                         int max_attempts = 32) {
    if (gens_in.empty()) throw error("normalize_generators: no generators");
    const VarSetPtr& vars = gens_in[0].vars();
    for (const auto& g : gens_in)
        if (!(*g.vars() == *vars)) throw error("normalize_generators: generators disagree on variables");
    const int c = int(gens_in.size());
    const int zidx = vars->size() - 1;
    const K one = [&] {
        for (const auto& g : gens_in)
            if (!g.is_zero()) return one_like(g.any_coeff());
        throw error("normalize_generators: all generators are zero");
    }();

    std::vector<int> orig_rank;
    for (const auto& a : points) orig_rank.push_back(detail::ambient_rank_at(gens_in, a));

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<MPoly<K>> gens = gens_in;
        if (attempt > 0) {
            Rng r = rng.fork(std::uint64_t(attempt));
            for (int i = c - 1; i > 0; --i) {
                int j = int(r.below(std::uint64_t(i) + 1));
                std::swap(gens[size_t(i)], gens[size_t(j)]);
            }
            if (attempt >= 4 && c >= 2) {
                // mix a random multiple of a later generator into the first
                int s = 1 + int(r.below(std::uint64_t(c - 1)));
                K t = scale_int(one, r.int_in(1, 7));
                gens[0] = gens[0] + MPoly<K>::constant(vars, t) * gens[size_t(s)];
            }
        }

        std::vector<UPoly<K>> phi;
        phi.reserve(size_t(c));
        for (const auto& g : gens) phi.push_back(restrict_to_line(g, one));
        bool any = false;
        for (const auto& f : phi) any = any || !f.is_zero();
        if (!any) throw error("normalize_generators: the line lies inside the subscheme");

        // extended-gcd chain across the nonzero restrictions
        std::vector<UPoly<K>> alpha(static_cast<size_t>(c));
        UPoly<K> d;
        bool started = false;
        for (int s = 0; s < c; ++s) {
            if (phi[size_t(s)].is_zero()) continue;
            if (!started) {
                K inv = one / phi[size_t(s)].lc();
                d = inv * phi[size_t(s)];
                alpha[size_t(s)] = UPoly<K>::constant(inv);
                started = true;
                continue;
            }
            auto eg = egcd(d, phi[size_t(s)]);
            for (auto& a : alpha)
                if (!a.is_zero()) a = eg.u * a;
            alpha[size_t(s)] = eg.v;
            d = eg.g;
        }

        std::vector<MPoly<K>> out;
        out.reserve(size_t(c));
        MPoly<K> g1(vars);
        for (int s = 0; s < c; ++s) {
            if (alpha[size_t(s)].is_zero()) continue;
            g1 = g1 + from_upoly(alpha[size_t(s)], vars, zidx) * gens[size_t(s)];
        }
        out.push_back(g1);
        // The first generator with nonzero restriction is replaced by the
        // combination; every other one is reduced to zero restriction.
        bool dropped = false;
        for (int s = 0; s < c; ++s) {
            if (!dropped && !phi[size_t(s)].is_zero()) {
                dropped = true;
                continue;
            }
            UPoly<K> quot =
                phi[size_t(s)].is_zero() ? UPoly<K>() : divide_exact(phi[size_t(s)], d);
            MPoly<K> gs = gens[size_t(s)];
            if (!quot.is_zero()) gs = gs - from_upoly(quot, vars, zidx) * g1;
            out.push_back(std::move(gs));
        }

        // sanity: restrictions now (d, 0, ..., 0)
        if (!(restrict_to_line(out[0], one) == d))
            throw error("normalize_generators: combination does not restrict to the gcd");
        for (size_t s = 1; s < out.size(); ++s)
            if (!restrict_to_line(out[s], one).is_zero())
                throw error("normalize_generators: residual restriction after normalization");

        bool ok = true;
        for (size_t j = 0; j < points.size(); ++j) {
            if (orig_rank[j] != c) continue;  // input not regular there; nothing to preserve
            if (detail::ambient_rank_at(out, points[j]) != c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            NormalizedSystem<K> ns;
            ns.gens = std::move(out);
            ns.d = std::move(d);
            ns.attempts = attempt;
            return ns;
        }
    }
    throw error("normalize_generators: verification failed after randomized retries");
}

// Substitutes v_i = -b u_i into a standard-chart presentation, producing the
// star-chart presentation of the fiber direction.  Relies on the standard
// chart layout: chart variables ordered u_1..u_{N-1}, v_1..v_{N-1}.
template <class K>
OHPresentation<K> specialize_to_star(const OHPresentation<K>& pres, const K& b, const K& one) {
    if (pres.chart_dim % 2 != 0)
        throw error("specialize_to_star: presentation does not have u/v chart layout");
    const int n = pres.chart_dim / 2;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(pres.vars->name(i));
    for (int i = pres.chart_dim; i < pres.vars->size(); ++i) names.push_back(pres.vars->name(i));
    VarSetPtr out = make_varset(names);

    std::vector<std::optional<MPoly<K>>> targets(size_t(pres.vars->size()));
    for (int i = 0; i < n; ++i)
        targets[size_t(n + i)] = MPoly<K>::constant(out, -b) * MPoly<K>::variable(out, i, one);

    OHPresentation<K> sp;
    sp.vars = out;
    sp.chart_dim = n;
    sp.profile = pres.profile;
    sp.c = pres.c;
    sp.labels = pres.labels;
    for (const auto& eq : pres.equations) sp.equations.push_back(eq.substitute(targets, out));
    return sp;
}

}  // namespace multisec
