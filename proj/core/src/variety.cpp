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

#include "multisec/variety.hpp"

#include "multisec/poly_text.hpp"

namespace multisec {

void ImplicitVariety::validate() const {
    if (N < 1) throw error("ImplicitVariety: ambient dimension must be >= 1");
    if (codim < 1 || codim > N) throw error("ImplicitVariety: codimension out of range");
    if (gens.empty()) throw error("ImplicitVariety: no generators");
    if (int(gens.size()) < codim)
        throw error("ImplicitVariety: fewer generators than the codimension");
    if (vars->size() != N + 1) throw error("ImplicitVariety: expected N+1 variables");
    for (const auto& g : gens) {
        if (!(*g.vars() == *vars)) throw error("ImplicitVariety: generator variable mismatch");
        if (g.is_zero()) throw error("ImplicitVariety: zero generator");
        if (!g.homogeneous_degree())
            throw error("ImplicitVariety: generator is not homogeneous");
    }
}

VarSetPtr projective_vars(int N) {
    std::vector<std::string> names;
    for (int i = 0; i <= N; ++i) names.push_back("X" + std::to_string(i));
    return make_varset(names);
}

MPoly<Fp> reduce_poly_mod(const MPoly<Rational>& f, const PrimeField& F) {
    MPoly<Fp> out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Fp r = F.from_rational(c);
        if (!r.is_zero()) out.add_term(e, r);
    }
    return out;
}

FpVariety reduce_mod(const ImplicitVariety& X, std::int64_t p) {
    X.validate();
    FpVariety out{X.name, X.N, X.codim, PrimeField(p), X.vars, {}};
    for (const auto& g : X.gens) {
        MPoly<Fp> r = reduce_poly_mod(g, out.F);
        if (r.is_zero())
            throw error("reduce_mod: generator vanishes identically mod " + std::to_string(p));
        out.gens.push_back(std::move(r));
    }
    return out;
}

bool on_variety(const FpVariety& X, const std::vector<Fp>& pt) {
    if (int(pt.size()) != X.N + 1) throw error("on_variety: wrong coordinate count");
    for (const auto& g : X.gens)
        if (!g.eval(pt).is_zero()) return false;
    return true;
}

std::vector<std::vector<Fp>> rational_points(const FpVariety& X) {
    ProjectiveSpace ps(X.F.p(), X.N);
    std::vector<std::vector<Fp>> out;
    for (std::int64_t i = 0; i < ps.point_count(); ++i) {
        std::vector<Fp> pt = ps.point_at(i);
        if (on_variety(X, pt)) out.push_back(std::move(pt));
    }
    return out;
}

int ambient_jacobian_rank(const FpVariety& X, const std::vector<Fp>& pt) {
    Matrix<Fp> jac;
    for (const auto& g : X.gens) {
        std::vector<Fp> row;
        for (int v = 0; v <= X.N; ++v) row.push_back(g.derivative(v).eval(pt));
        jac.push_back(std::move(row));
    }
    return rank(std::move(jac));
}

VarSetPtr chart_ambient_vars(int N) {
    std::vector<std::string> names;
    for (int i = 1; i < N; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("z");
    return make_varset(names);
}

std::vector<MPoly<Fp>> chart_generators(const FpVariety& X, const Matrix<Fp>& M) {
    const int n = X.N + 1;
    if (int(M.size()) != n || int(M[0].size()) != n)
        throw error("chart_generators: frame must be (N+1) x (N+1)");
    VarSetPtr cv = chart_ambient_vars(X.N);
    const Fp one = X.F.make(1);

    // X_i = M[i][0] * 1 + sum_{j=1}^{N-1} M[i][j] x_j + M[i][N] z
    std::vector<std::optional<MPoly<Fp>>> targets(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        MPoly<Fp> t = MPoly<Fp>::constant(cv, M[size_t(i)][0]);
        for (int j = 1; j < n; ++j) {
            if (M[size_t(i)][size_t(j)].is_zero()) continue;
            t = t + MPoly<Fp>::constant(cv, M[size_t(i)][size_t(j)]) *
                        MPoly<Fp>::variable(cv, j - 1, one);
        }
        targets[size_t(i)] = std::move(t);
    }

    std::vector<MPoly<Fp>> out;
    out.reserve(X.gens.size());
    for (const auto& g : X.gens) out.push_back(g.substitute(targets, cv));
    return out;
}

}  // namespace multisec
