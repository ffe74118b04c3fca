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

#include "multisec/gallery.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "multisec/elim.hpp"
#include "multisec/linalg.hpp"

namespace multisec {

void ParametricVariety::validate() const {
    if (m < 1) throw error("ParametricVariety: source dimension must be positive");
    if (N < m + 1) throw error("ParametricVariety: target dimension too small");
    if (int(comps.size()) != N + 1) throw error("ParametricVariety: needs N+1 components");
    if (codim < 1 || codim > N) throw error("ParametricVariety: codimension out of range");
    if (svars->size() != m + 1) throw error("ParametricVariety: source variable count mismatch");
    std::optional<int> d;
    for (const auto& f : comps) {
        if (f.is_zero()) throw error("ParametricVariety: zero component");
        auto hd = f.homogeneous_degree();
        if (!hd) throw error("ParametricVariety: component is not homogeneous");
        if (d && *d != *hd) throw error("ParametricVariety: components disagree on degree");
        d = hd;
    }
}

VarSetPtr source_vars(int m) {
    std::vector<std::string> names;
    names.reserve(size_t(m) + 1);
    for (int i = 0; i <= m; ++i) names.push_back("s" + std::to_string(i));
    return make_varset(std::move(names));
}

FpParametric reduce_mod(const ParametricVariety& V, std::int64_t p) {
    V.validate();
    PrimeField F(p);
    FpParametric out{V.name, V.m, V.N, V.codim, F, V.svars, {}};
    out.comps.reserve(V.comps.size());
    for (const auto& f : V.comps) {
        MPoly<Fp> g = reduce_poly_mod(f, F);
        if (g.is_zero())
            throw error("reduce_mod: component of " + V.name + " vanishes mod " + std::to_string(p));
        out.comps.push_back(std::move(g));
    }
    return out;
}

std::vector<Fp> image_point(const FpParametric& f, const std::vector<Fp>& s) {
    if (int(s.size()) != f.m + 1) throw error("image_point: source point size mismatch");
    std::vector<Fp> out;
    out.reserve(f.comps.size());
    for (const auto& c : f.comps) out.push_back(c.eval(s));
    return normalize_point(std::move(out));
}

std::vector<std::vector<Fp>> rational_image(const FpParametric& f) {
    ProjectiveSpace src(f.F.p(), f.m);
    std::vector<std::vector<Fp>> out;
    out.reserve(size_t(src.point_count()));
    for (std::int64_t i = 0; i < src.point_count(); ++i)
        out.push_back(image_point(f, src.point_at(i)));
    std::sort(out.begin(), out.end(), [](const std::vector<Fp>& a, const std::vector<Fp>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].r != b[i].r) return a[i].r < b[i].r;
        }
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool on_image(const FpParametric& f, const std::vector<Fp>& pt) {
    const std::vector<Fp> n = normalize_point(pt);
    ProjectiveSpace src(f.F.p(), f.m);
    for (std::int64_t i = 0; i < src.point_count(); ++i)
        if (image_point(f, src.point_at(i)) == n) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Line classification on the source side
// ---------------------------------------------------------------------------

namespace {

// Pullbacks of the line's defining forms; zero pullbacks are dropped.  Empty
// result means the whole image lies on the line.
std::vector<MPoly<Fp>> pullback_system(const FpParametric& f, const LineSpan& line) {
    std::vector<MPoly<Fp>> out;
    for (const auto& lam : line_forms(line, f.F)) {
        MPoly<Fp> g = MPoly<Fp>::zero(f.svars);
        for (size_t i = 0; i < lam.size(); ++i) {
            if (lam[i].is_zero()) continue;
            g = g + MPoly<Fp>::constant(f.svars, lam[i]) * f.comps[i];
        }
        if (!g.is_zero()) out.push_back(std::move(g));
    }
    return out;
}

// Dehomogenization of a binary homogeneous polynomial in variables (i0, i1)
// to a form in the line coordinate at i0 = 1; all other variables must be
// absent.
BinaryForm<Fp> binary_of(const MPoly<Fp>& R, int i0, int i1) {
    auto hd = R.homogeneous_degree();
    if (!hd) throw error("binary_of: polynomial is not homogeneous");
    std::vector<Fp> c(size_t(*hd) + 1, Fp{});
    for (const auto& [e, coeff] : R.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (int(i) != i0 && int(i) != i1 && e[i] != 0)
                throw error("binary_of: extra variable present");
        c[size_t(e[size_t(i1)])] = coeff;
    }
    return BinaryForm<Fp>{UPoly<Fp>(std::move(c)), *hd};
}

GeometricProfile profile_m1(const FpParametric& f, const LineSpan& line) {
    std::vector<MPoly<Fp>> sys = pullback_system(f, line);
    if (sys.empty()) return GeometricProfile::contained_marker();
    std::vector<BinaryForm<Fp>> forms;
    forms.reserve(sys.size());
    for (const auto& g : sys) forms.push_back(binary_of(g, 0, 1));
    BinaryForm<Fp> G = binary_gcd(forms);
    if (G.f.degree() == 0 && G.infinity_multiplicity() == 0) return GeometricProfile{};
    return GeometricProfile::from_factors(binary_factor_profile(G));
}

// deterministic invertible source coordinate changes; attempt 0 is identity
Matrix<Fp> source_change(const PrimeField& F, int n, int attempt) {
    Matrix<Fp> M(size_t(n), std::vector<Fp>(size_t(n), F.zero()));
    if (attempt == 0) {
        for (int i = 0; i < n; ++i) M[size_t(i)][size_t(i)] = F.one();
        return M;
    }
    Rng r(0x5eed5eedULL * std::uint64_t(attempt) + 0x9e3779b97f4a7c15ULL);
    for (int tries = 0; tries < 64; ++tries) {
        for (auto& row : M)
            for (auto& x : row) x = F.make(std::int64_t(r.below(std::uint64_t(F.p()))));
        Matrix<Fp> copy = M;
        if (rank(std::move(copy)) == n) return M;
    }
    throw error("source_change: failed to draw an invertible matrix");
}

std::vector<MPoly<Fp>> apply_change(const std::vector<MPoly<Fp>>& sys, const Matrix<Fp>& M,
                                    const VarSetPtr& svars) {
    const int n = int(M.size());
    std::vector<std::optional<MPoly<Fp>>> targets;
    targets.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
        MPoly<Fp> t = MPoly<Fp>::zero(svars);
        for (int j = 0; j < n; ++j) {
            if (M[size_t(i)][size_t(j)].is_zero()) continue;
            Exp e(size_t(n), 0);
            e[size_t(j)] = 1;
            MPoly<Fp> mono = MPoly<Fp>::zero(svars);
            mono.add_term(e, M[size_t(i)][size_t(j)]);
            t = t + mono;
        }
        targets.push_back(std::move(t));
    }
    std::vector<MPoly<Fp>> out;
    out.reserve(sys.size());
    for (const auto& g : sys) out.push_back(g.substitute(targets, svars));
    return out;
}

// one located closed point of the pullback scheme
struct SourcePoint {
    Fpe t0, t1, t2;  // projective source coordinates over the residue field
    int degree = 1;
    int multiplicity = 0;
};

// univariate slice of g in s2 at (s0, s1) = (a, b) over the residue field
UPoly<Fpe> slice_at(const MPoly<Fp>& g, const Fpe& a, const Fpe& b, const ExtensionFieldPtr& E) {
    std::vector<Fpe> c(size_t(std::max(g.degree_in(2), 0)) + 1, E->zero());
    for (const auto& [e, coeff] : g.terms()) {
        Fpe v = E->embed(coeff);
        if (e[0] > 0) v = v * pow(a, e[0]);
        if (e[1] > 0) v = v * pow(b, e[1]);
        c[size_t(e[2])] = c[size_t(e[2])] + v;
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return UPoly<Fpe>(std::move(c));
}

// local multiplicity of the system at the source point, in the affine chart
// of the first nonzero homogeneous coordinate, translated to the origin
int multiplicity_at(const std::vector<MPoly<Fp>>& sys, const SourcePoint& sp,
                    const ExtensionFieldPtr& E) {
    const std::vector<Fpe> coords{sp.t0, sp.t1, sp.t2};
    int pivot = -1;
    for (int i = 0; i < 3 && pivot < 0; ++i)
        if (!coords[size_t(i)].is_zero()) pivot = i;
    if (pivot < 0) throw error("multiplicity_at: zero source point");
    const Fpe inv = inverse(coords[size_t(pivot)]);

    VarSetPtr yvars = make_varset({"y1", "y2"});
    auto yvar = [&](int k) {
        Exp e(2, 0);
        e[size_t(k)] = 1;
        MPoly<Fpe> m = MPoly<Fpe>::zero(yvars);
        m.add_term(e, E->one());
        return m;
    };
    // substitution targets: pivot coordinate 1, others y_k + value
    std::vector<MPoly<Fpe>> sub;
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) {
            sub.push_back(MPoly<Fpe>::constant(yvars, E->one()));
        } else {
            MPoly<Fpe> t = yvar(k);
            Fpe value = coords[size_t(i)] * inv;
            if (!value.is_zero()) t = t + MPoly<Fpe>::constant(yvars, value);
            sub.push_back(std::move(t));
            ++k;
        }
    }
    // rebuild each generator term by term under the substitution
    std::vector<MPoly<Fpe>> local;
    local.reserve(sys.size());
    for (const auto& g : sys) {
        MPoly<Fpe> acc = MPoly<Fpe>::zero(yvars);
        for (const auto& [e, coeff] : g.terms()) {
            MPoly<Fpe> term = MPoly<Fpe>::constant(yvars, E->embed(coeff));
            for (int i = 0; i < 3; ++i)
                for (int rep = 0; rep < e[size_t(i)]; ++rep) term = term * sub[size_t(i)];
            acc = acc + term;
        }
        if (!acc.is_zero()) local.push_back(std::move(acc));
    }
    if (local.empty()) throw error("multiplicity_at: system vanishes identically");
    return local_multiplicity_at_origin(local, E->one(), 8);
}

bool is_canonical_orbit_rep(const Fpe& t, int e) {
    Fpe cur = t;
    for (int i = 1; i < e; ++i) {
        cur = frobenius(cur);
        if (cur.c < t.c) return false;
    }
    return true;
}

GeometricProfile profile_m2(const FpParametric& f, const LineSpan& line) {
    std::vector<MPoly<Fp>> sys0 = pullback_system(f, line);
    if (sys0.empty()) return GeometricProfile::contained_marker();
    const PrimeField& F = f.F;
    const Fp one = F.one();

    std::optional<int> length;  // computed lazily; invariant across attempts

    const int max_attempts = 32;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Matrix<Fp> chg = source_change(F, 3, attempt);
        std::vector<MPoly<Fp>> sys = apply_change(sys0, chg, f.svars);

        // pivot: a generator whose s2-degree equals its total degree
        int pivot = -1;
        for (size_t i = 0; i < sys.size(); ++i) {
            int d = *sys[i].homogeneous_degree();
            if (sys[i].degree_in(2) == d) {
                pivot = int(i);
                break;
            }
        }
        if (pivot < 0) continue;

        std::vector<BinaryForm<Fp>> res;
        for (size_t j = 0; j < sys.size(); ++j) {
            if (int(j) == pivot) continue;
            MPoly<Fp> R = sylvester_resultant(sys[size_t(pivot)], sys[j], 2, one);
            if (R.is_zero()) continue;
            res.push_back(binary_of(R, 0, 1));
        }
        if (res.empty()) {
            // every resultant vanished: decide by the scheme length
            if (!length) length = projective_scheme_length(sys0, one);
            if (!length) return GeometricProfile::contained_marker();
            continue;
        }
        BinaryForm<Fp> G = binary_gcd(res);
        if (G.f.degree() == 0 && G.infinity_multiplicity() == 0) return GeometricProfile{};

        if (!length) {
            auto L = projective_scheme_length(sys0, one);
            if (!L) return GeometricProfile::contained_marker();
            length = L;
        }
        if (*length == 0) return GeometricProfile{};

        // candidate projections: finite roots over extensions, then [0:1]
        bool attempt_failed = false;
        std::vector<SourcePoint> points;
        int total = 0;
        const int max_e = G.f.degree();
        for (int e = 1; e <= max_e && !attempt_failed; ++e) {
            ExtensionFieldPtr E = make_extension(F.p(), e);
            if (E->order() > 2'000'000)
                throw error("parametric_line_profile: extension scan too large");
            std::vector<Fpe> gc;
            gc.reserve(size_t(G.f.degree()) + 1);
            for (int i = 0; i <= G.f.degree(); ++i) gc.push_back(E->embed(G.f.coeff(i)));
            UPoly<Fpe> Ge(std::move(gc));
            for (std::int64_t idx = 0; idx < E->order() && !attempt_failed; ++idx) {
                Fpe t = E->element_at(idx);
                if (!Ge.eval(t).is_zero()) continue;
                if (degree_over_prime_field(t) != e) continue;
                if (!is_canonical_orbit_rep(t, e)) continue;
                SourcePoint sp;
                sp.t0 = E->one();
                sp.t1 = t;
                sp.degree = e;
                // s2 fiber over the candidate
                std::vector<UPoly<Fpe>> u;
                for (const auto& g : sys) {
                    UPoly<Fpe> s = slice_at(g, sp.t0, sp.t1, E);
                    if (!s.is_zero()) u.push_back(std::move(s));
                }
                if (u.empty()) {
                    attempt_failed = true;  // positive-dimensional fiber
                    break;
                }
                UPoly<Fpe> h = u[0].monic();
                for (size_t i = 1; i < u.size(); ++i) h = gcd_monic(h, u[i]);
                if (h.degree() == 0) continue;  // spurious candidate
                UPoly<Fpe> dh = h.derivative();
                if (dh.is_zero()) {
                    attempt_failed = true;
                    break;
                }
                UPoly<Fpe> hred = divide_exact(h, gcd_monic(h, dh)).monic();
                if (hred.degree() != 1) {
                    attempt_failed = true;  // projection not injective over this point
                    break;
                }
                sp.t2 = -hred.eval(E->zero());
                sp.multiplicity = multiplicity_at(sys, sp, E);
                total += sp.degree * sp.multiplicity;
                points.push_back(std::move(sp));
            }
        }
        if (!attempt_failed && G.infinity_multiplicity() > 0) {
            ExtensionFieldPtr E = make_extension(F.p(), 1);
            SourcePoint sp;
            sp.t0 = E->zero();
            sp.t1 = E->one();
            sp.degree = 1;
            std::vector<UPoly<Fpe>> u;
            for (const auto& g : sys) {
                UPoly<Fpe> s = slice_at(g, sp.t0, sp.t1, E);
                if (!s.is_zero()) u.push_back(std::move(s));
            }
            if (u.empty()) {
                attempt_failed = true;
            } else {
                UPoly<Fpe> h = u[0].monic();
                for (size_t i = 1; i < u.size(); ++i) h = gcd_monic(h, u[i]);
                if (h.degree() > 0) {
                    UPoly<Fpe> dh = h.derivative();
                    if (dh.is_zero()) {
                        attempt_failed = true;
                    } else {
                        UPoly<Fpe> hred = divide_exact(h, gcd_monic(h, dh)).monic();
                        if (hred.degree() != 1) {
                            attempt_failed = true;
                        } else {
                            sp.t2 = -hred.eval(E->zero());
                            sp.multiplicity = multiplicity_at(sys, sp, E);
                            total += sp.degree * sp.multiplicity;
                            points.push_back(std::move(sp));
                        }
                    }
                }
            }
        }
        if (attempt_failed) continue;
        if (total != *length) continue;  // a point escaped this projection; retry

        FactorProfile fp;
        for (const auto& sp : points) fp.push_back(FactorEntry{sp.degree, sp.multiplicity});
        std::sort(fp.begin(), fp.end());
        return GeometricProfile::from_factors(fp);
    }
    throw error("parametric_line_profile: classification did not stabilize");
}

}  // namespace

GeometricProfile parametric_line_profile(const FpParametric& f, const LineSpan& line) {
    if (f.m == 1) return profile_m1(f, line);
    if (f.m == 2) return profile_m2(f, line);
    throw error("parametric_line_profile: only source dimensions 1 and 2 are supported");
}

CensusCounts parametric_census(const FpParametric& f, const std::vector<Fp>& beta, int threads) {
    if (int(beta.size()) != f.N + 1) throw error("parametric_census: point size mismatch");
    if (on_image(f, beta))
        throw error("parametric_census: base point lies on the variety; redraw it");
    ProjectiveSpace ps(f.F.p(), f.N);
    const std::vector<Fp> nbeta = normalize_point(beta);
    std::vector<std::vector<Fp>> dirs = ps.directions_through(nbeta);

    const int nw = std::max(1, std::min<int>(threads, int(dirs.size())));
    std::vector<CensusCounts> part(static_cast<size_t>(nw));
    auto work = [&](int w) {
        size_t lo = dirs.size() * size_t(w) / size_t(nw);
        size_t hi = dirs.size() * size_t(w + 1) / size_t(nw);
        for (size_t i = lo; i < hi; ++i) {
            GeometricProfile prof = parametric_line_profile(f, LineSpan{nbeta, dirs[i]});
            CensusCounts& c = part[size_t(w)];
            if (prof.contained) {
                ++c.contained;
            } else if (prof.empty()) {
                ++c.empty;
            } else {
                ++c.by_profile[prof.str()];
                if (prof.total() >= 2) c.hits.push_back(LineHit{dirs[i], prof});
            }
        }
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(nw));
        for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    CensusCounts out;
    out.lines_total = std::int64_t(dirs.size());
    for (auto& piece : part) {
        out.empty += piece.empty;
        out.contained += piece.contained;
        for (const auto& [k, v] : piece.by_profile) out.by_profile[k] += v;
        for (auto& h : piece.hits) out.hits.push_back(std::move(h));
    }
    return out;
}

std::vector<Fp> draw_off_image(const FpParametric& f, const ProjectiveSpace& ps, Rng& rng,
                               std::vector<BetaDraw>& log, int max_draws) {
    return draw_point(
        ps, rng,
        [&](const std::vector<Fp>& pt) -> std::string {
            return on_image(f, pt) ? "on the variety" : "";
        },
        log, max_draws);
}

// ---------------------------------------------------------------------------
// Tangency pre-checks for surfaces in P^4
// ---------------------------------------------------------------------------

std::vector<MPoly<Fp>> tangency_system(const FpParametric& f, const std::vector<Fp>& beta) {
    if (f.m != 2 || f.N != 4)
        throw error("tangency_system: requires a surface in P^4 with a P^2 source");
    if (int(beta.size()) != 5) throw error("tangency_system: point size mismatch");
    std::vector<std::vector<MPoly<Fp>>> rows;
    for (int i = 0; i <= 2; ++i) {
        std::vector<MPoly<Fp>> row;
        row.reserve(5);
        for (int j = 0; j <= 4; ++j) row.push_back(f.comps[size_t(j)].derivative(i));
        rows.push_back(std::move(row));
    }
    std::vector<MPoly<Fp>> brow;
    brow.reserve(5);
    for (int j = 0; j <= 4; ++j) brow.push_back(MPoly<Fp>::constant(f.svars, beta[size_t(j)]));
    rows.push_back(std::move(brow));

    std::vector<MPoly<Fp>> minors;
    for (int drop = 0; drop <= 4; ++drop) {
        std::vector<std::vector<MPoly<Fp>>> m;
        for (const auto& row : rows) {
            std::vector<MPoly<Fp>> r;
            for (int j = 0; j <= 4; ++j)
                if (j != drop) r.push_back(row[size_t(j)]);
            m.push_back(std::move(r));
        }
        minors.push_back(poly_determinant(std::move(m)));
    }
    return minors;
}

SteinerCheck steiner_generic(const FpParametric& f, const std::vector<Fp>& beta) {
    SteinerCheck out;
    if (on_image(f, beta)) {
        out.reason = "on the surface";
        return out;
    }
    std::vector<MPoly<Fp>> sys;
    for (auto& g : tangency_system(f, beta))
        if (!g.is_zero()) sys.push_back(std::move(g));
    if (sys.empty()) {
        out.reason = "tangency system vanishes identically";
        return out;
    }
    const Fp one = f.F.one();
    auto L = projective_scheme_length(sys, one);
    if (!L) {
        out.reason = "tangency scheme is not finite";
        return out;
    }
    if (*L != 6) {
        out.reason = "tangency scheme has length " + std::to_string(*L) + ", expected 6";
        return out;
    }

    ProjectiveSpace src(f.F.p(), 2);
    std::vector<std::vector<Fp>> sources;
    for (std::int64_t i = 0; i < src.point_count(); ++i) {
        std::vector<Fp> s = src.point_at(i);
        bool vanishes = true;
        for (const auto& g : sys)
            if (!g.eval(s).is_zero()) {
                vanishes = false;
                break;
            }
        if (!vanishes) continue;
        Matrix<Fp> grad;
        for (const auto& g : sys) {
            std::vector<Fp> row;
            for (int v = 0; v <= 2; ++v) row.push_back(g.derivative(v).eval(s));
            grad.push_back(std::move(row));
        }
        if (rank(std::move(grad)) != 2) {
            out.reason = "non-reduced rational tangency point";
            return out;
        }
        sources.push_back(std::move(s));
    }
    if (int(sources.size()) != 6) {
        out.reason = "only " + std::to_string(sources.size()) + " of 6 tangency points rational";
        return out;
    }

    const std::vector<Fp> nbeta = normalize_point(beta);
    for (const auto& s : sources) {
        GeometricProfile prof = parametric_line_profile(f, LineSpan{nbeta, image_point(f, s)});
        if (!(prof == GeometricProfile{{2}, false})) {
            out.reason = "tangency line has class " + prof.str() + ", expected {2}";
            return out;
        }
    }
    out.ok = true;
    out.tangency_sources = std::move(sources);
    return out;
}

std::vector<Fp> draw_steiner_point(const FpParametric& f, Rng& rng, std::vector<BetaDraw>& log,
                                   int max_draws) {
    ProjectiveSpace ps(f.F.p(), f.N);
    return draw_point(
        ps, rng,
        [&](const std::vector<Fp>& pt) -> std::string { return steiner_generic(f, pt).reason; },
        log, max_draws);
}

bool smooth_at_rational_points(const FpVariety& X) {
    for (const auto& pt : rational_points(X))
        if (ambient_jacobian_rank(X, pt) != X.codim) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

namespace {

MPoly<Rational> mono(const VarSetPtr& vars, Exp e, long c = 1) {
    MPoly<Rational> f = MPoly<Rational>::zero(vars);
    f.add_term(std::move(e), Rational(c));
    return f;
}

// quadric X_a X_b - X_c X_d
MPoly<Rational> minor2(const VarSetPtr& vars, int a, int b, int c, int d) {
    const size_t n = size_t(vars->size());
    Exp e1(n, 0), e2(n, 0);
    ++e1[size_t(a)];
    ++e1[size_t(b)];
    ++e2[size_t(c)];
    ++e2[size_t(d)];
    MPoly<Rational> f = MPoly<Rational>::zero(vars);
    f.add_term(std::move(e1), Rational(1));
    f.add_term(std::move(e2), Rational(-1));
    return f;
}

Exp exp_of(int nv, std::initializer_list<int> raised) {
    Exp e(size_t(nv), 0);
    for (int i : raised) ++e[size_t(i)];
    return e;
}

Builtin make_twisted_cubic() {
    Builtin b;
    b.name = "twisted-cubic";
    b.summary = "degree 3 rational normal curve in P^3";
    ImplicitVariety X;
    X.name = b.name;
    X.N = 3;
    X.codim = 2;
    X.vars = projective_vars(3);
    X.gens = {minor2(X.vars, 0, 1, 3, 3), minor2(X.vars, 0, 2, 1, 3), minor2(X.vars, 2, 3, 1, 1)};
    X.validate();
    b.implicit = std::move(X);

    ParametricVariety P;
    P.name = b.name;
    P.m = 1;
    P.N = 3;
    P.codim = 2;
    P.svars = source_vars(1);
    P.comps = {mono(P.svars, exp_of(2, {0, 0, 0})), mono(P.svars, exp_of(2, {0, 1, 1})),
               mono(P.svars, exp_of(2, {1, 1, 1})), mono(P.svars, exp_of(2, {0, 0, 1}))};
    P.validate();
    b.parametric = std::move(P);
    return b;
}

Builtin make_rnq() {
    Builtin b;
    b.name = "rational-normal-quartic";
    b.summary = "degree 4 rational normal curve in P^4";
    ImplicitVariety X;
    X.name = b.name;
    X.N = 4;
    X.codim = 3;
    X.vars = projective_vars(4);
    // minors of [[X0, X4, X1, X2], [X4, X1, X2, X3]]
    X.gens = {minor2(X.vars, 0, 1, 4, 4), minor2(X.vars, 0, 2, 4, 1), minor2(X.vars, 0, 3, 4, 2),
              minor2(X.vars, 4, 2, 1, 1), minor2(X.vars, 4, 3, 1, 2), minor2(X.vars, 1, 3, 2, 2)};
    X.validate();
    b.implicit = std::move(X);

    ParametricVariety P;
    P.name = b.name;
    P.m = 1;
    P.N = 4;
    P.codim = 3;
    P.svars = source_vars(1);
    P.comps = {mono(P.svars, exp_of(2, {0, 0, 0, 0})), mono(P.svars, exp_of(2, {0, 0, 1, 1})),
               mono(P.svars, exp_of(2, {0, 1, 1, 1})), mono(P.svars, exp_of(2, {1, 1, 1, 1})),
               mono(P.svars, exp_of(2, {0, 0, 0, 1}))};
    P.validate();
    b.parametric = std::move(P);
    return b;
}

Builtin make_parabola() {
    Builtin b;
    b.name = "parabola";
    b.summary = "smooth conic in P^2";
    ImplicitVariety X;
    X.name = b.name;
    X.N = 2;
    X.codim = 1;
    X.vars = projective_vars(2);
    X.gens = {minor2(X.vars, 0, 1, 2, 2)};
    X.validate();
    b.implicit = std::move(X);

    ParametricVariety P;
    P.name = b.name;
    P.m = 1;
    P.N = 2;
    P.codim = 1;
    P.svars = source_vars(1);
    P.comps = {mono(P.svars, exp_of(2, {0, 0})), mono(P.svars, exp_of(2, {1, 1})),
               mono(P.svars, exp_of(2, {0, 1}))};
    P.validate();
    b.parametric = std::move(P);
    return b;
}

// Veronese monomial order s0^2, s0 s1, s0 s2, s1^2, s1 s2, s2^2; the induced
// coordinates fill the symmetric matrix [[X0,X1,X2],[X1,X3,X4],[X2,X4,X5]].
const std::vector<Exp>& veronese_monomials() {
    static const std::vector<Exp> monos = {exp_of(3, {0, 0}), exp_of(3, {0, 1}), exp_of(3, {0, 2}),
                                           exp_of(3, {1, 1}), exp_of(3, {1, 2}), exp_of(3, {2, 2})};
    return monos;
}

Builtin make_veronese_p5() {
    Builtin b;
    b.name = "veronese-p5";
    b.summary = "Veronese surface in P^5";
    ImplicitVariety X;
    X.name = b.name;
    X.N = 5;
    X.codim = 3;
    X.vars = projective_vars(5);
    X.gens = {minor2(X.vars, 0, 3, 1, 1), minor2(X.vars, 0, 4, 1, 2), minor2(X.vars, 1, 4, 2, 3),
              minor2(X.vars, 0, 5, 2, 2), minor2(X.vars, 1, 5, 2, 4), minor2(X.vars, 3, 5, 4, 4)};
    X.validate();
    b.implicit = std::move(X);

    ParametricVariety P;
    P.name = b.name;
    P.m = 2;
    P.N = 5;
    P.codim = 3;
    P.svars = source_vars(2);
    for (const auto& e : veronese_monomials()) P.comps.push_back(mono(P.svars, Exp(e)));
    P.validate();
    b.parametric = std::move(P);
    return b;
}

template <class K>
K det3(const std::vector<std::vector<K>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<std::vector<Rational>> catalecticant(const std::vector<Rational>& w) {
    return {{w[0], w[1], w[2]}, {w[1], w[3], w[4]}, {w[2], w[4], w[5]}};
}

// Projection of the Veronese surface to P^4 along a seeded integer matrix.
// The seed ladder starts at 42 and accepts the first matrix of full rank
// whose kernel direction has an invertible catalecticant, over Q and mod
// every supported census prime.
Builtin make_projected_veronese() {
    const std::vector<std::int64_t> supported = {7, 11, 13};
    for (std::uint64_t seed = 42; seed < 42 + 64; ++seed) {
        Rng r(seed);
        std::vector<std::vector<Rational>> M(5, std::vector<Rational>(6));
        for (auto& row : M)
            for (auto& x : row) x = Rational(long(r.int_in(-9, 9)));

        Matrix<Rational> copy = M;
        if (rank(std::move(copy)) != 5) continue;
        std::vector<std::vector<Rational>> ker = nullspace(M, Rational(0), Rational(1));
        if (ker.size() != 1) continue;
        std::vector<Rational>& w = ker[0];
        if (det3(catalecticant(w)).is_zero()) continue;

        // primitive integer representative of the kernel direction
        mpz_class den_lcm = 1;
        for (const auto& x : w) {
            mpz_class d = x.denominator();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
        std::vector<mpz_class> wz;
        mpz_class content = 0;
        for (const auto& x : w) {
            mpz_class v = x.numerator() * (den_lcm / x.denominator());
            wz.push_back(v);
            content = gcd(content, v);
        }
        if (content != 0)
            for (auto& v : wz) v /= content;

        bool primes_ok = true;
        for (std::int64_t p : supported) {
            PrimeField F(p);
            Matrix<Fp> Mp;
            for (const auto& row : M) {
                std::vector<Fp> fr;
                for (const auto& x : row) fr.push_back(F.from_rational(x));
                Mp.push_back(std::move(fr));
            }
            if (rank(std::move(Mp)) != 5) {
                primes_ok = false;
                break;
            }
            std::vector<std::vector<Fp>> cat(3, std::vector<Fp>(3));
            std::vector<Fp> wp;
            for (const auto& v : wz) wp.push_back(F.from_mpz(v));
            cat[0] = {wp[0], wp[1], wp[2]};
            cat[1] = {wp[1], wp[3], wp[4]};
            cat[2] = {wp[2], wp[4], wp[5]};
            if (det3(cat).is_zero()) {
                primes_ok = false;
                break;
            }
        }
        if (!primes_ok) continue;

        Builtin b;
        b.name = "projected-veronese-p4";
        b.summary = "Veronese surface projected to P^4 (seed " + std::to_string(seed) + ")";
        ParametricVariety P;
        P.name = b.name;
        P.m = 2;
        P.N = 4;
        P.codim = 2;
        P.svars = source_vars(2);
        const auto& monos = veronese_monomials();
        for (int row = 0; row < 5; ++row) {
            MPoly<Rational> comp = MPoly<Rational>::zero(P.svars);
            for (int k = 0; k < 6; ++k) {
                if (M[size_t(row)][size_t(k)].is_zero()) continue;
                MPoly<Rational> t = MPoly<Rational>::zero(P.svars);
                t.add_term(Exp(monos[size_t(k)]), M[size_t(row)][size_t(k)]);
                comp = comp + t;
            }
            P.comps.push_back(std::move(comp));
        }
        P.validate();
        b.parametric = std::move(P);
        return b;
    }
    throw error("projected-veronese-p4: seed ladder exhausted");
}

Builtin make_random_ci(const std::string& name) {
    // grammar: random-ci(N,d1[,d2...],seed)
    const std::string inner = name.substr(10, name.size() - 11);
    std::vector<long> nums;
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw error("builtin: bad number in " + name);
            nums.push_back(v);
        } catch (const std::logic_error&) {
            throw error("builtin: bad number in " + name);
        }
    }
    if (nums.size() < 3) throw error("builtin: random-ci needs N, at least one degree, and a seed");
    const int N = int(nums.front());
    const long seed = nums.back();
    std::vector<int> degrees(nums.begin() + 1, nums.end() - 1);
    if (N < 2 || N > 8) throw error("builtin: random-ci ambient dimension out of range [2,8]");
    if (int(degrees.size()) > N - 1) throw error("builtin: random-ci has too many degrees");
    for (int d : degrees)
        if (d < 1 || d > 6) throw error("builtin: random-ci degree out of range [1,6]");
    if (seed < 0) throw error("builtin: random-ci seed must be nonnegative");

    Builtin b;
    b.name = name;
    b.summary = "seeded complete intersection in P^" + std::to_string(N);
    ImplicitVariety X;
    X.name = name;
    X.N = N;
    X.codim = int(degrees.size());
    X.vars = projective_vars(N);
    Rng r(static_cast<std::uint64_t>(seed));
    for (int d : degrees) {
        MPoly<Rational> g = MPoly<Rational>::zero(X.vars);
        while (g.is_zero()) {
            for (const auto& e : monomials_of_degree(N + 1, d)) {
                long c = r.int_in(-9, 9);
                if (c == 0) continue;
                MPoly<Rational> t = MPoly<Rational>::zero(X.vars);
                t.add_term(Exp(e), Rational(c));
                g = g + t;
            }
        }
        X.gens.push_back(std::move(g));
    }
    X.validate();
    b.implicit = std::move(X);
    return b;
}

}  // namespace

Builtin builtin(const std::string& name) {
    if (name == "twisted-cubic") return make_twisted_cubic();
    if (name == "rational-normal-quartic") return make_rnq();
    if (name == "parabola") return make_parabola();
    if (name == "veronese-p5") return make_veronese_p5();
    if (name == "projected-veronese-p4") return make_projected_veronese();
    if (name.rfind("random-ci(", 0) == 0 && name.back() == ')') return make_random_ci(name);
    std::string choices;
    for (const auto& [n, s] : builtin_catalog()) {
        (void)s;
        if (!choices.empty()) choices += ", ";
        choices += n;
    }
    throw error("builtin: unknown name '" + name + "'; choose one of " + choices);
}

std::vector<std::pair<std::string, std::string>> builtin_catalog() {
    return {
        {"twisted-cubic", "degree 3 rational normal curve in P^3"},
        {"rational-normal-quartic", "degree 4 rational normal curve in P^4"},
        {"parabola", "smooth conic in P^2"},
        {"veronese-p5", "Veronese surface in P^5"},
        {"projected-veronese-p4", "Veronese surface projected to P^4"},
        {"random-ci(N,d1[,d2...],seed)", "seeded complete intersection in P^N"},
    };
}

}  // namespace multisec
