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

#include <map>
#include <optional>
#include <vector>

#include "multisec/linalg.hpp"
#include "multisec/mpoly.hpp"

namespace multisec {

namespace detail {

template <class K>
MPoly<K> poly_det(std::vector<std::vector<MPoly<K>>>& m, size_t lo, std::vector<bool>& used,
                  const VarSetPtr& vars) {
    const size_t n = m.size();
    if (lo == n) return MPoly<K>::zero(vars);  // unreachable for n >= 1
    // expand along row lo over unused columns
    MPoly<K> acc(vars);
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        if (used[col]) continue;
        if (!m[lo][col].is_zero()) {
            if (lo + 1 == n) {
                acc = sign > 0 ? acc + m[lo][col] : acc - m[lo][col];
            } else {
                used[col] = true;
                MPoly<K> sub = poly_det(m, lo + 1, used, vars);
                used[col] = false;
                MPoly<K> term = m[lo][col] * sub;
                acc = sign > 0 ? acc + term : acc - term;
            }
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

// Determinant of a small square matrix of polynomials (cofactor expansion;
// intended for Sylvester matrices of low-degree inputs).
template <class K>
MPoly<K> poly_determinant(std::vector<std::vector<MPoly<K>>> m) {
    if (m.empty()) throw error("poly_determinant: empty matrix");
    const size_t n = m.size();
    if (n > 10) throw error("poly_determinant: matrix too large for cofactor expansion");
    for (const auto& row : m)
        if (row.size() != n) throw error("poly_determinant: matrix not square");
    std::vector<bool> used(n, false);
    return detail::poly_det(m, 0, used, m[0][0].vars());
}

// Sylvester resultant of f and g with respect to one variable; the result
// does not involve that variable.  Degree-zero edge cases follow the usual
// conventions Res(a, g) = a^deg(g).
template <class K>
MPoly<K> sylvester_resultant(const MPoly<K>& f, const MPoly<K>& g, int var, const K& one) {
    if (!(*f.vars() == *g.vars())) throw error("sylvester_resultant: variable set mismatch");
    const VarSetPtr& vars = f.vars();
    if (f.is_zero() || g.is_zero()) return MPoly<K>::zero(vars);
    const int df = f.degree_in(var);
    const int dg = g.degree_in(var);
    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    auto coeff = [&](std::map<int, MPoly<K>>& c, int d) -> MPoly<K> {
        auto it = c.find(d);
        return it == c.end() ? MPoly<K>::zero(vars) : it->second;
    };
    if (df == 0 && dg == 0) return MPoly<K>::constant(vars, one);
    if (df == 0) {
        MPoly<K> r = MPoly<K>::constant(vars, one);
        for (int i = 0; i < dg; ++i) r = r * coeff(fc, 0);
        return r;
    }
    if (dg == 0) {
        MPoly<K> r = MPoly<K>::constant(vars, one);
        for (int i = 0; i < df; ++i) r = r * coeff(gc, 0);
        return r;
    }
    const int n = df + dg;
    std::vector<std::vector<MPoly<K>>> S(size_t(n), std::vector<MPoly<K>>(size_t(n), MPoly<K>::zero(vars)));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) S[size_t(r)][size_t(r + i)] = coeff(fc, df - i);
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i) S[size_t(dg + r)][size_t(r + i)] = coeff(gc, dg - i);
    return poly_determinant(std::move(S));
}

// Exponent vectors of total degree exactly t in nv variables, lexicographic.
inline std::vector<Exp> monomials_of_degree(int nv, int t) {
    std::vector<Exp> out;
    Exp e(size_t(nv), 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == nv - 1) {
            e[size_t(idx)] = rem;
            out.push_back(e);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[size_t(idx)] = v;
            self(self, idx + 1, rem - v);
        }
    };
    rec(rec, 0, t);
    return out;
}

// Exponent vectors of total degree < t.
inline std::vector<Exp> monomials_below_degree(int nv, int t) {
    std::vector<Exp> out;
    for (int d = 0; d < t; ++d)
        for (auto& e : monomials_of_degree(nv, d)) out.push_back(std::move(e));
    return out;
}

// dim_K of the degree-t graded piece of S/I for homogeneous generators.
template <class K>
int graded_quotient_dim(const std::vector<MPoly<K>>& gens, int t, const K& one) {
    if (gens.empty()) throw error("graded_quotient_dim: no generators");
    const VarSetPtr& vars = gens[0].vars();
    const int nv = vars->size();
    std::vector<Exp> basis = monomials_of_degree(nv, t);
    std::map<Exp, int, GrlexLess> col;
    for (size_t i = 0; i < basis.size(); ++i) col[basis[i]] = int(i);

    Matrix<K> rows;
    const K zero = zero_like(one);
    for (const auto& g : gens) {
        auto hd = g.homogeneous_degree();
        if (!hd) throw error("graded_quotient_dim: generator is not homogeneous");
        int d = *hd;
        if (d > t) continue;
        for (const auto& m : monomials_of_degree(nv, t - d)) {
            std::vector<K> row(basis.size(), zero);
            for (const auto& [e, c] : g.terms()) {
                Exp prod = e;
                for (int i = 0; i < nv; ++i) prod[size_t(i)] += m[size_t(i)];
                row[size_t(col.at(prod))] = c;
            }
            rows.push_back(std::move(row));
        }
    }
    int rk = rows.empty() ? 0 : rank(std::move(rows));
    return int(basis.size()) - rk;
}

// Stabilized Hilbert function value of a zero-dimensional projective scheme:
// the common value of dim (S/I)_t for large t equals the scheme's length.
// Returns nullopt if the value has not stabilized for `window` consecutive
// steps by tmax (in particular for positive-dimensional schemes).
template <class K>
std::optional<int> projective_scheme_length(const std::vector<MPoly<K>>& gens, const K& one,
                                            int tmax = 12, int window = 2) {
    int prev = -1;
    int run = 0;
    for (int t = 1; t <= tmax; ++t) {
        int h = graded_quotient_dim(gens, t, one);
        if (h == prev) {
            if (++run >= window) return h;
        } else {
            run = 0;
            prev = h;
        }
    }
    return std::nullopt;
}

// Multiplicity of a zero-dimensional scheme at the origin: the stabilized
// dimension of K[x]/(I + m^T), computed on truncated monomial spans for
// T = 2, 3, ... until two consecutive values agree.  Components away from the
// origin are killed by the truncation, so generators may cut extra points.
template <class K>
int local_multiplicity_at_origin(const std::vector<MPoly<K>>& gens, const K& one, int cap = 8) {
    if (gens.empty()) throw error("local_multiplicity_at_origin: no generators");
    const VarSetPtr& vars = gens[0].vars();
    const int nv = vars->size();
    const K zero = zero_like(one);
    for (const auto& g : gens)
        if (!multisec::is_zero(g.constant_term()))
            throw error("local_multiplicity_at_origin: generator does not vanish at the origin");

    int prev = -1;
    for (int T = 1; T <= cap + 1; ++T) {
        std::vector<Exp> basis = monomials_below_degree(nv, T);
        std::map<Exp, int, GrlexLess> col;
        for (size_t i = 0; i < basis.size(); ++i) col[basis[i]] = int(i);

        Matrix<K> rows;
        for (const auto& g : gens) {
            for (const auto& m : monomials_below_degree(nv, T)) {
                std::vector<K> row(basis.size(), zero);
                bool any = false;
                for (const auto& [e, c] : g.terms()) {
                    Exp prod = e;
                    int deg = 0;
                    for (int i = 0; i < nv; ++i) {
                        prod[size_t(i)] += m[size_t(i)];
                        deg += int(prod[size_t(i)]);
                    }
                    if (deg >= T) continue;  // truncated away
                    row[size_t(col.at(prod))] = c;
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        }
        int rk = rows.empty() ? 0 : rank(std::move(rows));
        int q = int(basis.size()) - rk;
        if (q == prev) return q;
        prev = q;
    }
    throw error("local_multiplicity_at_origin: multiplicity too large (cap " + std::to_string(cap) +
                ")");
}

}  // namespace multisec
