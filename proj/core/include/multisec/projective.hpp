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

#include <cstdint>
#include <vector>

#include "multisec/arith.hpp"
#include "multisec/linalg.hpp"

namespace multisec {

// Scale so the leftmost nonzero coordinate becomes 1; the result is the
// canonical representative of the projective point.
inline std::vector<Fp> normalize_point(std::vector<Fp> x) {
    for (auto& c : x) {
        if (!c.is_zero()) {
            Fp inv = inverse(c);
            for (auto& d : x) d = d * inv;
            return x;
        }
    }
    throw error("normalize_point: zero vector");
}

// Enumeration of P^N(F_p).  Canonical order: by pivot position (the leftmost
// nonzero coordinate, which equals 1), then by the trailing coordinates read
// as a base-p number, most significant first.
class ProjectiveSpace {
  public:
    ProjectiveSpace(std::int64_t p, int N) : F_(p), N_(N) {
        if (N < 1) throw error("ProjectiveSpace: dimension must be at least 1");
        std::int64_t v = 1;
        for (int i = 0; i <= N; ++i) {
            if (v > (std::int64_t(1) << 62) / p)
                throw error("ProjectiveSpace: too many points to enumerate");
            v *= p;
        }
        q_ = v;  // p^(N+1)
    }

    std::int64_t p() const { return F_.p(); }
    int N() const { return N_; }
    const PrimeField& field() const { return F_; }

    std::int64_t point_count() const { return (q_ - 1) / (F_.p() - 1); }

    std::int64_t line_count() const {
        // Gaussian binomial [N+1 choose 2]_p.
        std::int64_t p = F_.p();
        std::int64_t num1 = (q_ - 1) / (p - 1);           // [N+1]_p
        std::int64_t num2 = (q_ / p - 1) / (p - 1);       // [N]_p
        return num1 * num2 / (p + 1);                     // divide by [2]_p
    }

    std::vector<Fp> point_at(std::int64_t idx) const {
        if (idx < 0 || idx >= point_count()) throw error("point_at: index out of range");
        std::int64_t p = F_.p();
        std::int64_t block = q_ / p;  // p^N points with pivot 0
        int pivot = 0;
        while (idx >= block) {
            idx -= block;
            block /= p;
            ++pivot;
        }
        std::vector<Fp> x(size_t(N_ + 1), F_.make(0));
        x[size_t(pivot)] = F_.make(1);
        for (int i = N_; i > pivot; --i) {
            x[size_t(i)] = F_.make(idx % p);
            idx /= p;
        }
        return x;
    }

    std::int64_t index_of(const std::vector<Fp>& pt) const {
        std::vector<Fp> x = normalize_point(pt);
        if (int(x.size()) != N_ + 1) throw error("index_of: wrong coordinate count");
        std::int64_t p = F_.p();
        int pivot = 0;
        while (x[size_t(pivot)].is_zero()) ++pivot;
        std::int64_t idx = 0;
        std::int64_t block = q_ / p;
        for (int i = 0; i < pivot; ++i) {
            idx += block;
            block /= p;
        }
        std::int64_t v = 0;
        for (int i = pivot + 1; i <= N_; ++i) v = v * p + x[size_t(i)].r;
        return idx + v;
    }

    // Lines through a fixed point: each meets the complement hyperplane
    // {x_m = 0}, m the pivot of the base point, in exactly one point, so the
    // returned direction list parametrizes them bijectively.
    std::vector<std::vector<Fp>> directions_through(const std::vector<Fp>& base) const {
        std::vector<Fp> b = normalize_point(base);
        int m = 0;
        while (b[size_t(m)].is_zero()) ++m;
        ProjectiveSpace sub(F_.p(), N_ - 1);
        std::vector<std::vector<Fp>> out;
        out.reserve(size_t(sub.point_count()));
        for (std::int64_t i = 0; i < sub.point_count(); ++i) {
            std::vector<Fp> d = sub.point_at(i);
            std::vector<Fp> full(size_t(N_ + 1), F_.make(0));
            int at = 0;
            for (int j = 0; j <= N_; ++j)
                if (j != m) full[size_t(j)] = d[size_t(at++)];
            out.push_back(std::move(full));
        }
        return out;
    }

  private:
    PrimeField F_;
    int N_;
    std::int64_t q_;
};

// A line as an ordered pair of spanning points in canonical reduced form:
// two rows in reduced row echelon form with pivots scaled to 1.
struct LineSpan {
    std::vector<Fp> P;
    std::vector<Fp> Q;
};

// All lines of P^N(F_p), each exactly once, via reduced row echelon
// representatives: pivot columns i < j, row P has support {i} + columns
// > i excluding j, row Q has support {j} + columns > j.
inline std::vector<LineSpan> all_lines(const ProjectiveSpace& ps) {
    const std::int64_t p = ps.p();
    const int N = ps.N();
    const PrimeField& F = ps.field();
    std::vector<LineSpan> out;
    out.reserve(size_t(ps.line_count()));
    for (int i = 0; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            // free positions: row P in columns i+1..N except j; row Q in j+1..N
            std::vector<int> freeP, freeQ;
            for (int t = i + 1; t <= N; ++t)
                if (t != j) freeP.push_back(t);
            for (int t = j + 1; t <= N; ++t) freeQ.push_back(t);
            std::int64_t total = 1;
            for (size_t t = 0; t < freeP.size() + freeQ.size(); ++t) total *= p;
            for (std::int64_t v = 0; v < total; ++v) {
                std::vector<Fp> P(size_t(N + 1), F.make(0)), Q(size_t(N + 1), F.make(0));
                P[size_t(i)] = F.make(1);
                Q[size_t(j)] = F.make(1);
                std::int64_t rest = v;
                for (size_t t = freeQ.size(); t-- > 0;) {
                    Q[size_t(freeQ[t])] = F.make(rest % p);
                    rest /= p;
                }
                for (size_t t = freeP.size(); t-- > 0;) {
                    P[size_t(freeP[t])] = F.make(rest % p);
                    rest /= p;
                }
                out.push_back(LineSpan{std::move(P), std::move(Q)});
            }
        }
    }
    return out;
}

// Linear forms cutting out the span of P and Q: a basis of the kernel of the
// 2 x (N+1) matrix with rows P, Q.  Returns N-1 coefficient vectors.
inline std::vector<std::vector<Fp>> line_forms(const LineSpan& line, const PrimeField& F) {
    Matrix<Fp> m;
    m.push_back(line.P);
    m.push_back(line.Q);
    return nullspace(m, F.make(0), F.make(1));
}

// Extend {first, last} to a basis of F_p^{N+1} by greedily inserting standard
// basis vectors; returns the square matrix with columns
// [first, e_{i_1}, ..., e_{i_{N-1}}, last].
inline Matrix<Fp> frame_through(const std::vector<Fp>& first, const std::vector<Fp>& last,
                                const PrimeField& F) {
    const int n = int(first.size());
    if (int(last.size()) != n) throw error("frame_through: size mismatch");
    std::vector<std::vector<Fp>> basis{first, last};
    {
        Matrix<Fp> chk;
        chk.push_back(first);
        chk.push_back(last);
        if (rank(chk) != 2) throw error("frame_through: points do not span a line");
    }
    std::vector<std::vector<Fp>> middle;
    for (int i = 0; i < n && int(basis.size()) < n; ++i) {
        std::vector<Fp> e(size_t(n), F.make(0));
        e[size_t(i)] = F.make(1);
        Matrix<Fp> chk;
        for (const auto& b : basis) chk.push_back(b);
        chk.push_back(e);
        if (rank(chk) == int(basis.size()) + 1) {
            basis.push_back(e);
            middle.push_back(std::move(e));
        }
    }
    if (int(basis.size()) != n) throw error("frame_through: failed to complete basis");
    Matrix<Fp> M(size_t(n), std::vector<Fp>(size_t(n), F.make(0)));
    for (int r = 0; r < n; ++r) M[size_t(r)][0] = first[size_t(r)];
    for (int c = 0; c < n - 2; ++c)
        for (int r = 0; r < n; ++r) M[size_t(r)][size_t(c + 1)] = middle[size_t(c)][size_t(r)];
    for (int r = 0; r < n; ++r) M[size_t(r)][size_t(n - 1)] = last[size_t(r)];
    return M;
}

// Coordinates (alpha, gamma) with R = alpha P + gamma Q, for R on the span.
inline std::pair<Fp, Fp> coordinates_on_line(const LineSpan& line, const std::vector<Fp>& R,
                                             const PrimeField& /*F*/) {
    const int n = int(R.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Fp det = line.P[size_t(i)] * line.Q[size_t(j)] - line.P[size_t(j)] * line.Q[size_t(i)];
            if (det.is_zero()) continue;
            Fp inv = inverse(det);
            Fp alpha = (R[size_t(i)] * line.Q[size_t(j)] - R[size_t(j)] * line.Q[size_t(i)]) * inv;
            Fp gamma = (line.P[size_t(i)] * R[size_t(j)] - line.P[size_t(j)] * R[size_t(i)]) * inv;
            // verify: R really lies on the span
            for (int t = 0; t < n; ++t)
                if (!(alpha * line.P[size_t(t)] + gamma * line.Q[size_t(t)] == R[size_t(t)]))
                    throw error("coordinates_on_line: point not on the line");
            return {alpha, gamma};
        }
    }
    throw error("coordinates_on_line: degenerate span");
}

}  // namespace multisec
