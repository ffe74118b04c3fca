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

#include "multisec/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "multisec/chart.hpp"
#include "multisec/linalg.hpp"

namespace multisec {

std::string GeometricProfile::str() const {
    if (contained) return "contained";
    std::string s = "{";
    for (size_t i = 0; i < mults.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mults[i]);
    }
    s += "}";
    return s;
}

GeometricProfile GeometricProfile::from_factors(const FactorProfile& fp) {
    GeometricProfile out;
    for (const auto& e : fp)
        for (int i = 0; i < e.degree; ++i) out.mults.push_back(e.multiplicity);
    std::sort(out.mults.begin(), out.mults.end(), std::greater<int>());
    return out;
}

GeometricProfile GeometricProfile::contained_marker() {
    GeometricProfile out;
    out.contained = true;
    return out;
}

BinaryForm<Fp> restrict_form_to_span(const MPoly<Fp>& F, const LineSpan& line) {
    const int nv = F.vars()->size();
    if (int(line.P.size()) != nv || int(line.Q.size()) != nv)
        throw error("restrict_form_to_span: point size does not match variable count");
    auto deg = F.homogeneous_degree();
    if (!deg) throw error("restrict_form_to_span: generator is not homogeneous");
    const std::int64_t p = [&] {
        for (const auto& a : line.P)
            if (a.p != 0) return a.p;
        for (const auto& a : line.Q)
            if (a.p != 0) return a.p;
        throw error("restrict_form_to_span: zero line point");
    }();
    const Fp one{1 % p, p};

    // per-variable powers of the parametrized coordinate P_i + z Q_i
    std::vector<std::vector<UPoly<Fp>>> pow(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        int di = std::max(F.degree_in(i), 0);
        auto& pi = pow[size_t(i)];
        pi.reserve(size_t(di) + 1);
        pi.push_back(UPoly<Fp>({one}));
        UPoly<Fp> lin({line.P[size_t(i)], line.Q[size_t(i)]});
        for (int k = 1; k <= di; ++k) pi.push_back(pi.back() * lin);
    }
    UPoly<Fp> acc;
    for (const auto& [e, c] : F.terms()) {
        UPoly<Fp> term({c});
        for (int i = 0; i < nv; ++i) {
            int ei = e[size_t(i)];
            if (ei == 0) continue;
            if (pow[size_t(i)].size() <= size_t(ei)) {
                auto& pi = pow[size_t(i)];
                UPoly<Fp> lin({line.P[size_t(i)], line.Q[size_t(i)]});
                while (pi.size() <= size_t(ei)) pi.push_back(pi.back() * lin);
            }
            term = term * pow[size_t(i)][size_t(ei)];
        }
        acc = acc + term;
    }
    return BinaryForm<Fp>{acc, *deg};
}

namespace {

// Classifies the intersection of one line with the variety; the gcd form is
// returned alongside so callers can locate rational intersection points.
struct LineClass {
    GeometricProfile profile;
    std::optional<BinaryForm<Fp>> gcd;  // absent for contained lines
};

LineClass classify_line(const FpVariety& X, const LineSpan& line) {
    std::vector<BinaryForm<Fp>> forms;
    forms.reserve(X.gens.size());
    bool any = false;
    for (const auto& g : X.gens) {
        BinaryForm<Fp> f = restrict_form_to_span(g, line);
        if (!f.is_zero()) any = true;
        forms.push_back(std::move(f));
    }
    if (!any) return LineClass{GeometricProfile::contained_marker(), std::nullopt};
    BinaryForm<Fp> g = binary_gcd(forms);
    if (g.f.degree() == 0 && g.infinity_multiplicity() == 0)
        return LineClass{GeometricProfile{}, std::move(g)};
    return LineClass{GeometricProfile::from_factors(binary_factor_profile(g)), std::move(g)};
}

void tally(CensusCounts& c, const LineClass& lc, const std::vector<Fp>& direction) {
    if (lc.profile.contained) {
        ++c.contained;
        return;
    }
    if (lc.profile.empty()) {
        ++c.empty;
        return;
    }
    ++c.by_profile[lc.profile.str()];
    if (lc.profile.total() >= 2) c.hits.push_back(LineHit{direction, lc.profile});
}

}  // namespace

GeometricProfile line_profile(const FpVariety& X, const LineSpan& line) {
    return classify_line(X, line).profile;
}

GeometricProfile line_profile(const FpVariety& X, const std::vector<Fp>& beta,
                              const std::vector<Fp>& direction) {
    Matrix<Fp> m;
    m.push_back(beta);
    m.push_back(direction);
    if (rank(std::move(m)) != 2) throw error("line_profile: points do not span a line");
    return line_profile(X, LineSpan{beta, direction});
}

CensusCounts census_through_point(const FpVariety& X, const std::vector<Fp>& beta, int threads) {
    if (int(beta.size()) != X.N + 1) throw error("census_through_point: point size mismatch");
    if (on_variety(X, beta))
        throw error("census_through_point: base point lies on the variety; redraw it");

    ProjectiveSpace ps(X.F.p(), X.N);
    std::vector<std::vector<Fp>> dirs = ps.directions_through(normalize_point(beta));

    const int nw = std::max(1, std::min<int>(threads, int(dirs.size())));
    std::vector<CensusCounts> part(static_cast<size_t>(nw));

    auto work = [&](int w) {
        size_t lo = dirs.size() * size_t(w) / size_t(nw);
        size_t hi = dirs.size() * size_t(w + 1) / size_t(nw);
        for (size_t i = lo; i < hi; ++i)
            tally(part[size_t(w)], classify_line(X, LineSpan{beta, dirs[i]}), dirs[i]);
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

std::int64_t count_with_total_at_least(const CensusCounts& c, int t) {
    std::int64_t n = c.contained;
    for (const auto& h : c.hits)
        if (h.profile.total() >= t) ++n;
    if (t <= 1) {
        // hits only track totals >= 2; recover the rest from the class counts
        n = c.contained;
        for (const auto& [k, v] : c.by_profile) {
            (void)k;
            n += v;
        }
    }
    return n;
}

std::int64_t count_profile(const CensusCounts& c, std::vector<int> mults) {
    GeometricProfile want;
    want.mults = std::move(mults);
    std::sort(want.mults.begin(), want.mults.end(), std::greater<int>());
    auto it = c.by_profile.find(want.str());
    return it == c.by_profile.end() ? 0 : it->second;
}

DimensionEstimate dimension_estimate(const std::vector<std::pair<std::int64_t, std::int64_t>>& counts,
                                     double threshold) {
    DimensionEstimate out;
    std::vector<std::pair<double, double>> pts;  // (log p, log count)
    bool any_positive = false;
    for (const auto& [p, n] : counts) {
        if (p < 2) throw error("dimension_estimate: invalid prime");
        if (n < 0) throw error("dimension_estimate: negative count");
        if (n > 0) {
            any_positive = true;
            pts.emplace_back(std::log(double(p)), std::log(double(n)));
        }
    }
    if (!any_positive) {
        out.status = "empty";
        return out;
    }
    if (pts.size() < 2) {
        out.status = "insufficient";
        return out;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = double(pts.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        out.status = "insufficient";
        return out;
    }
    out.status = "ok";
    out.slope = (n * sxy - sx * sy) / denom;
    out.dimension = int(std::llround(out.slope));
    if (out.dimension < 0) out.dimension = 0;
    out.residual = std::abs(out.slope - double(out.dimension));
    out.flagged = out.residual > threshold;
    return out;
}

std::vector<Fp> draw_point(const ProjectiveSpace& ps, Rng& rng,
                           const std::function<std::string(const std::vector<Fp>&)>& reject_reason,
                           std::vector<BetaDraw>& log, int max_draws) {
    for (int i = 0; i < max_draws; ++i) {
        std::vector<Fp> pt = ps.point_at(std::int64_t(rng.below(std::uint64_t(ps.point_count()))));
        std::string reason = reject_reason(pt);
        log.push_back(BetaDraw{pt, reason.empty(), reason});
        if (reason.empty()) return pt;
    }
    throw error("draw_point: no acceptable point after " + std::to_string(max_draws) + " draws");
}

std::vector<Fp> draw_general_point(const FpVariety& X, Rng& rng, std::vector<BetaDraw>& log,
                                   int max_draws) {
    ProjectiveSpace ps(X.F.p(), X.N);
    return draw_point(
        ps, rng,
        [&](const std::vector<Fp>& pt) -> std::string {
            return on_variety(X, pt) ? "on the variety" : "";
        },
        log, max_draws);
}

namespace {

// restriction orders of the gcd of a chart system along {x = 0}
std::vector<int> restriction_orders(const std::vector<MPoly<Fp>>& gens,
                                    const std::vector<Fp>& points, const Fp& one) {
    UPoly<Fp> d;
    bool any = false;
    for (const auto& g : gens) {
        UPoly<Fp> f = restrict_to_line(g, one);
        if (f.is_zero()) continue;
        d = any ? gcd_monic(d, f) : f.monic();
        any = true;
    }
    if (!any) throw error("select_local_ci: system restricts to zero on the line");
    std::vector<int> out;
    out.reserve(points.size());
    for (const auto& a : points) out.push_back(order_at(d, a));
    return out;
}

}  // namespace

std::vector<MPoly<Fp>> select_local_ci(const std::vector<MPoly<Fp>>& gens, int c,
                                       const std::vector<Fp>& points, Rng rng, int max_attempts) {
    if (gens.empty()) throw error("select_local_ci: no generators");
    if (c < 1 || c > int(gens.size()))
        throw error("select_local_ci: codimension outside the generator count");
    const Fp one = [&] {
        for (const auto& g : gens)
            if (!g.is_zero()) return one_like(g.any_coeff());
        throw error("select_local_ci: all generators are zero");
    }();
    const std::int64_t p = one.p;
    const VarSetPtr& vars = gens[0].vars();

    const std::vector<int> want_ord = restriction_orders(gens, points, one);
    for (const auto& a : points) {
        int r = detail::ambient_rank_at(gens, a);
        if (r != c)
            throw error("select_local_ci: ambient Jacobian rank " + std::to_string(r) +
                        " at a marked point, expected " + std::to_string(c));
    }

    auto verify = [&](const std::vector<MPoly<Fp>>& sub) -> bool {
        bool any = false;
        for (const auto& g : sub) any = any || !g.is_zero();
        if (!any) return false;
        UPoly<Fp> d;
        bool first = true;
        for (const auto& g : sub) {
            UPoly<Fp> f = restrict_to_line(g, one);
            if (f.is_zero()) continue;
            d = first ? f.monic() : gcd_monic(d, f);
            first = false;
        }
        if (first) return false;
        for (size_t j = 0; j < points.size(); ++j)
            if (order_at(d, points[j]) != want_ord[j]) return false;
        for (const auto& a : points)
            if (detail::ambient_rank_at(sub, a) != c) return false;
        return true;
    };

    int attempts = 0;
    // plain index subsets first: deterministic and usually sufficient
    const int n = int(gens.size());
    std::vector<int> idx(static_cast<size_t>(c));
    std::iota(idx.begin(), idx.end(), 0);
    while (attempts < max_attempts) {
        std::vector<MPoly<Fp>> sub;
        sub.reserve(size_t(c));
        for (int i : idx) sub.push_back(gens[size_t(i)]);
        ++attempts;
        if (verify(sub)) return sub;
        // next combination in lex order
        int k = c - 1;
        while (k >= 0 && idx[size_t(k)] == n - c + k) --k;
        if (k < 0) break;
        ++idx[size_t(k)];
        for (int j = k + 1; j < c; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }

    for (; attempts < max_attempts; ++attempts) {
        Rng r = rng.fork(std::uint64_t(attempts));
        std::vector<MPoly<Fp>> sub;
        sub.reserve(size_t(c));
        for (int i = 0; i < c; ++i) {
            MPoly<Fp> g = MPoly<Fp>::zero(vars);
            for (int s = 0; s < n; ++s) {
                Fp lam = Fp{std::int64_t(r.below(std::uint64_t(p))), p};
                if (lam.is_zero()) continue;
                g = g + MPoly<Fp>::constant(vars, lam) * gens[size_t(s)];
            }
            sub.push_back(std::move(g));
        }
        if (verify(sub)) return sub;
    }
    throw error("select_local_ci: no complete-intersection subsystem found");
}

namespace {

// Greedy matching of requested multiplicities (descending) against available
// points.  Returns chosen indices aligned with the descending order, or
// nothing when the profile cannot be realized.
std::optional<std::vector<size_t>> assign_points(const std::vector<int>& want_desc,
                                                 const std::vector<int>& avail_mults) {
    std::vector<size_t> order(avail_mults.size());
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return avail_mults[a] > avail_mults[b]; });
    std::vector<char> used(avail_mults.size(), 0);
    std::vector<size_t> chosen;
    chosen.reserve(want_desc.size());
    for (int w : want_desc) {
        bool found = false;
        for (size_t oi : order) {
            if (used[oi] || avail_mults[oi] < w) continue;
            used[oi] = 1;
            chosen.push_back(oi);
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    return chosen;
}

std::vector<Fp> point_on_span(const LineSpan& line, const Fp& t, const PrimeField& /*F*/) {
    std::vector<Fp> out;
    out.reserve(line.P.size());
    for (size_t i = 0; i < line.P.size(); ++i) out.push_back(line.P[i] + t * line.Q[i]);
    return normalize_point(out);
}

}  // namespace

SampleReport smooth_sample(const FpVariety& X, const std::vector<Fp>& beta, const Profile& want,
                           int max_tests, Rng rng) {
    if (on_variety(X, beta))
        throw error("smooth_sample: base point lies on the variety; redraw it");
    const PrimeField& F = X.F;
    ProjectiveSpace ps(F.p(), X.N);
    const std::vector<Fp> nbeta = normalize_point(beta);
    std::vector<std::vector<Fp>> dirs = ps.directions_through(nbeta);

    std::vector<Fp> field_elems;
    field_elems.reserve(size_t(F.p()));
    for (std::int64_t t = 0; t < F.p(); ++t) field_elems.push_back(F.make(t));

    // want parts in descending order, remembering original slots
    std::vector<size_t> want_order(want.parts.size());
    std::iota(want_order.begin(), want_order.end(), size_t(0));
    std::sort(want_order.begin(), want_order.end(),
              [&](size_t a, size_t b) { return want.parts[a] > want.parts[b]; });
    std::vector<int> want_desc;
    want_desc.reserve(want.parts.size());
    for (size_t o : want_order) want_desc.push_back(want.parts[o]);

    SampleReport rep;
    std::uint64_t line_counter = 0;
    for (const auto& dir : dirs) {
        if (rep.tested >= max_tests) break;
        ++line_counter;
        LineSpan line{nbeta, dir};
        LineClass lc = classify_line(X, line);
        if (lc.profile.contained || lc.profile.empty()) continue;

        // geometric candidacy: the class must dominate the requested profile
        if (!assign_points(want_desc, lc.profile.mults)) continue;
        ++rep.candidates;

        // rational intersection points with multiplicities
        std::vector<std::vector<Fp>> pts;
        std::vector<int> mults;
        for (const auto& [a, m] : roots_by_scan(lc.gcd->f, field_elems)) {
            pts.push_back(point_on_span(line, a, F));
            mults.push_back(m);
        }
        if (lc.gcd->infinity_multiplicity() > 0) {
            pts.push_back(normalize_point(dir));
            mults.push_back(lc.gcd->infinity_multiplicity());
        }
        auto chosen = assign_points(want_desc, mults);
        if (!chosen) {
            ++rep.skipped;
            continue;
        }
        std::vector<std::vector<Fp>> marked(want.parts.size());
        for (size_t i = 0; i < want_order.size(); ++i)
            marked[want_order[i]] = pts[(*chosen)[i]];

        auto is_intersection = [&](const std::vector<Fp>& q) {
            for (const auto& r : pts)
                if (r == q) return true;
            return false;
        };

        // second frame point: off the variety, distinct from beta
        std::optional<std::vector<Fp>> B;
        for (std::int64_t t = 1; t < F.p() && !B; ++t) {
            std::vector<Fp> cand = point_on_span(line, F.make(t), F);
            if (!is_intersection(cand)) B = cand;
        }
        if (!B) {
            std::vector<Fp> cand = normalize_point(dir);
            if (!is_intersection(cand)) B = cand;
        }
        if (!B) {
            ++rep.skipped;
            continue;
        }

        try {
            Matrix<Fp> M = frame_through(nbeta, *B, F);
            std::vector<MPoly<Fp>> cgens = chart_generators(X, M);
            LineSpan chart_line{nbeta, *B};
            std::vector<Fp> marked_z;
            marked_z.reserve(marked.size());
            for (const auto& R : marked) {
                auto [alpha, gamma] = coordinates_on_line(chart_line, R, F);
                if (alpha.is_zero())
                    throw error("smooth_sample: marked point fell on the frame point");
                marked_z.push_back(gamma / alpha);
            }
            std::vector<MPoly<Fp>> sub =
                select_local_ci(cgens, X.codim, marked_z, rng.fork(line_counter * 2));
            NormalizedSystem<Fp> ns =
                normalize_generators(sub, marked_z, rng.fork(line_counter * 2 + 1));
            SmoothnessVerdict v = smooth_fiber_at(ns, want, marked_z, F.zero());
            ++rep.tested;
            if (v.smooth) {
                ++rep.smooth;
            } else {
                std::ostringstream os;
                os << "line " << line_counter << ": rank " << v.rank << " below expected "
                   << v.expected_rank;
                rep.failures.push_back(os.str());
            }
        } catch (const error& e) {
            ++rep.tested;
            std::ostringstream os;
            os << "line " << line_counter << ": " << e.what();
            rep.failures.push_back(os.str());
        }
    }
    if (rep.tested == 0)
        throw error("smooth_sample: no testable samples (all candidate lines were skipped)");
    return rep;
}

CoverCount secant_cover_count(const FpVariety& X, int k, std::int64_t budget) {
    if (k < 1) throw error("secant_cover_count: k must be positive");
    ProjectiveSpace ps(X.F.p(), X.N);
    const std::int64_t per_line = ps.p() + 1;
    if (ps.line_count() > budget / per_line)
        throw error("secant_cover_count: instance too large for the budget");

    CoverCount out;
    out.p = ps.p();
    out.points_total = ps.point_count();
    out.lines_total = ps.line_count();
    std::vector<char> hit(size_t(ps.point_count()), 0);
    const PrimeField& F = X.F;
    for (const LineSpan& line : all_lines(ps)) {
        GeometricProfile prof = line_profile(X, line);
        if (!prof.contained && prof.total() < k) continue;
        for (std::int64_t t = 0; t < ps.p(); ++t)
            hit[size_t(ps.index_of(point_on_span(line, F.make(t), F)))] = 1;
        hit[size_t(ps.index_of(line.Q))] = 1;
    }
    for (char h : hit) out.marked += h;
    return out;
}

}  // namespace multisec
