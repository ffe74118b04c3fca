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

#include "multisec/chart.hpp"
#include "multisec/hilbert.hpp"
#include "multisec/linalg.hpp"

namespace multisec {

// Vanishing data of the normalized system at the marked points: e_j is the
// multiplicity of the gcd restriction at a_j (at least k_j when the
// configuration lies on the scheme), and h_j the number of first-order
// conditions the leading generator contributes there:
//   h_j = k_j   when e_j > k_j,
//   h_j = k_j-1 when e_j = k_j.
struct MultFlags {
    std::vector<int> e;
    std::vector<int> h;
    int h_total = 0;
};

namespace detail {

template <class K>
void check_characteristic(const Profile& profile, const K& sample) {
    std::int64_t p = characteristic(sample);
    if (p == 0) return;
    for (int kj : profile.parts)
        if (p <= kj)
            throw error("tangent: characteristic " + std::to_string(p) +
                        " too small for multiplicity " + std::to_string(kj));
}

template <class K>
void check_distinct(const std::vector<K>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw error("tangent: coincident marked points; merge the profile first");
}

}  // namespace detail

template <class K>
MultFlags mult_flags(const NormalizedSystem<K>& ns, const Profile& profile,
                     const std::vector<K>& points) {
    if (int(points.size()) != profile.r()) throw error("mult_flags: point count mismatch");
    MultFlags out;
    for (int j = 0; j < profile.r(); ++j) {
        int e = order_at(ns.d, points[size_t(j)]);
        int kj = profile.parts[size_t(j)];
        if (e < kj)
            throw error("mult_flags: restriction vanishes to order " + std::to_string(e) +
                        " < " + std::to_string(kj) + " at marked point " + std::to_string(j + 1) +
                        "; the configuration is not on the scheme");
        out.e.push_back(e);
        out.h.push_back(e > kj ? kj : kj - 1);
        out.h_total += out.h.back();
    }
    return out;
}

// One cotangent row per first-order condition, tied to (generator t, point j,
// order s).
struct RowIndex {
    int t = 0;  // generator, 1-based
    int j = 0;  // marked point, 1-based
    int s = 0;  // derivative order
};

template <class K>
struct CotangentRows {
    Matrix<K> rows;                // in the chart cotangent coordinates
    std::vector<RowIndex> index;
    MultFlags flags;
    int expected_rank = 0;         // sum h_j + (c-1) k
};

// Rows of the first-order conditions in the standard chart: coordinates are
// (u_1..u_{N-1}, v_1..v_{N-1}).  The order-s condition on generator t at
// point j is the divided derivative D^s[(u_i z + v_i) q_{t,i}] evaluated at
// a_j; scaled by s! (invertible under the characteristic guard) the row is
//   u_i:  s q_{t,i}^{(s-1)}(a_j) + a_j q_{t,i}^{(s)}(a_j)
//   v_i:  q_{t,i}^{(s)}(a_j)
// with s < h_j for the leading generator and s < k_j for the others.  The
// factor s comes from the Leibniz rule; dropping it changes the row span
// once s >= 2.  The configuration is smooth of expected dimension exactly
// when the rows are linearly independent.
template <class K>
CotangentRows<K> grassmann_rows(const NormalizedSystem<K>& ns, const Profile& profile,
                                const std::vector<K>& points) {
    detail::check_distinct(points);
    const K one = one_like(ns.d.lc());
    detail::check_characteristic(profile, one);
    CotangentRows<K> out;
    out.flags = mult_flags(ns, profile, points);
    const int c = int(ns.gens.size());
    const int n = ns.gens[0].vars()->size() - 1;  // N-1 transverse coordinates
    out.expected_rank = out.flags.h_total + (c - 1) * profile.k();

    std::vector<LinearizedGenerator<K>> lin;
    lin.reserve(size_t(c));
    for (const auto& g : ns.gens) lin.push_back(linearize(g, one));

    for (int t = 1; t <= c; ++t) {
        for (int j = 1; j <= profile.r(); ++j) {
            const K& a = points[size_t(j - 1)];
            int smax = (t == 1) ? out.flags.h[size_t(j - 1)] : profile.parts[size_t(j - 1)];
            for (int s = 0; s < smax; ++s) {
                std::vector<K> row(size_t(2 * n), zero_like(one));
                for (int i = 0; i < n; ++i) {
                    const UPoly<K>& q = lin[size_t(t - 1)].q[size_t(i)];
                    K ds = q.derivative(s).eval(a);
                    K dprev = q.derivative(s - 1).eval(a);  // order -1 gives 0
                    row[size_t(i)] = scale_int(dprev, s) + a * ds;
                    row[size_t(n + i)] = ds;
                }
                out.rows.push_back(std::move(row));
                out.index.push_back(RowIndex{t, j, s});
            }
        }
    }
    return out;
}

struct SmoothnessVerdict {
    bool smooth = false;
    int rank = 0;
    int expected_rank = 0;
    int expected_dim = 0;
};

// Smoothness-of-expected-dimension test in the standard chart, at the
// configuration {x = 0} with the given marked points.
template <class K>
SmoothnessVerdict smooth_at(const NormalizedSystem<K>& ns, const Profile& profile,
                            const std::vector<K>& points) {
    auto rows = grassmann_rows(ns, profile, points);
    const int c = int(ns.gens.size());
    const int n = ns.gens[0].vars()->size() - 1;
    SmoothnessVerdict v;
    v.expected_rank = rows.expected_rank;
    v.rank = rows.rows.empty() ? 0 : rank(rows.rows);
    v.smooth = v.rank == v.expected_rank;
    v.expected_dim = 2 * n + profile.r() - c * profile.k();
    return v;
}

// Star-chart rows through the point (0,...,0,b): coordinates u_1..u_{N-1},
//   u_i:  s q_{t,i}^{(s-1)}(a_j) + (a_j - b) q_{t,i}^{(s)}(a_j),
// the s!-scaled divided derivative of (z - b) q_{t,i} at a_j.  Exposed
// separately so independence of the verdict from b is testable.
template <class K>
CotangentRows<K> fiber_rows(const NormalizedSystem<K>& ns, const Profile& profile,
                            const std::vector<K>& points, const K& b) {
    detail::check_distinct(points);
    for (const auto& a : points)
        if (a == b) throw error("fiber_rows: the star point must avoid the marked points");
    const K one = one_like(ns.d.lc());
    detail::check_characteristic(profile, one);
    CotangentRows<K> out;
    out.flags = mult_flags(ns, profile, points);
    const int c = int(ns.gens.size());
    const int n = ns.gens[0].vars()->size() - 1;
    out.expected_rank = out.flags.h_total + (c - 1) * profile.k();

    std::vector<LinearizedGenerator<K>> lin;
    lin.reserve(size_t(c));
    for (const auto& g : ns.gens) lin.push_back(linearize(g, one));

    for (int t = 1; t <= c; ++t) {
        for (int j = 1; j <= profile.r(); ++j) {
            const K& a = points[size_t(j - 1)];
            int smax = (t == 1) ? out.flags.h[size_t(j - 1)] : profile.parts[size_t(j - 1)];
            for (int s = 0; s < smax; ++s) {
                std::vector<K> row(size_t(n), zero_like(one));
                for (int i = 0; i < n; ++i) {
                    const UPoly<K>& q = lin[size_t(t - 1)].q[size_t(i)];
                    row[size_t(i)] = scale_int(q.derivative(s - 1).eval(a), s) +
                                     (a - b) * q.derivative(s).eval(a);
                }
                out.rows.push_back(std::move(row));
                out.index.push_back(RowIndex{t, j, s});
            }
        }
    }
    return out;
}

// The b-free form of the same criterion: the (N-1) x (sum h_j + (c-1)k)
// matrix with columns q_{t,i}^{(s)}(a_j) must have full column rank.  The
// verdict agrees with fiber_rows for every admissible b.
template <class K>
Matrix<K> fiber_matrix(const NormalizedSystem<K>& ns, const Profile& profile,
                       const std::vector<K>& points) {
    detail::check_distinct(points);
    const K one = one_like(ns.d.lc());
    detail::check_characteristic(profile, one);
    MultFlags flags = mult_flags(ns, profile, points);
    const int c = int(ns.gens.size());
    const int n = ns.gens[0].vars()->size() - 1;

    std::vector<LinearizedGenerator<K>> lin;
    lin.reserve(size_t(c));
    for (const auto& g : ns.gens) lin.push_back(linearize(g, one));

    Matrix<K> m(static_cast<size_t>(n));
    for (int t = 1; t <= c; ++t) {
        for (int j = 1; j <= profile.r(); ++j) {
            const K& a = points[size_t(j - 1)];
            int smax = (t == 1) ? flags.h[size_t(j - 1)] : profile.parts[size_t(j - 1)];
            for (int s = 0; s < smax; ++s) {
                for (int i = 0; i < n; ++i)
                    m[size_t(i)].push_back(lin[size_t(t - 1)].q[size_t(i)].derivative(s).eval(a));
            }
        }
    }
    return m;
}

// Smoothness of the star-chart configuration through (0,...,0,b); the verdict
// does not depend on the choice of b.
template <class K>
SmoothnessVerdict smooth_fiber_at(const NormalizedSystem<K>& ns, const Profile& profile,
                                  const std::vector<K>& points, const K& b) {
    for (const auto& a : points)
        if (a == b) throw error("smooth_fiber_at: the star point must avoid the marked points");
    Matrix<K> m = fiber_matrix(ns, profile, points);
    const int c = int(ns.gens.size());
    const int n = ns.gens[0].vars()->size() - 1;
    SmoothnessVerdict v;
    v.expected_rank = m.empty() ? 0 : int(m[0].size());
    v.rank = (m.empty() || m[0].empty()) ? 0 : rank(m);
    v.smooth = v.rank == v.expected_rank;
    v.expected_dim = n + profile.r() - c * profile.k();
    return v;
}

// Coincident marked points: merge multiplicities (first-occurrence order) and
// delegate to smooth_at; the verdict matches the split configuration's.
template <class K>
SmoothnessVerdict merge_then_test(const NormalizedSystem<K>& ns, const Profile& profile,
                                  const std::vector<K>& points) {
    if (int(points.size()) != profile.r()) throw error("merge_then_test: point count mismatch");
    std::vector<K> mpts;
    std::vector<int> mparts;
    for (int j = 0; j < profile.r(); ++j) {
        bool found = false;
        for (size_t i = 0; i < mpts.size(); ++i) {
            if (mpts[i] == points[size_t(j)]) {
                mparts[i] += profile.parts[size_t(j)];
                found = true;
                break;
            }
        }
        if (!found) {
            mpts.push_back(points[size_t(j)]);
            mparts.push_back(profile.parts[size_t(j)]);
        }
    }
    return smooth_at(ns, Profile(mparts), mpts);
}

}  // namespace multisec
