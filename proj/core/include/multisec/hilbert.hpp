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
#include <string>
#include <vector>

#include "multisec/linalg.hpp"
#include "multisec/mpoly.hpp"
#include "multisec/upoly.hpp"

namespace multisec {

// Alignment profile (k_1, ..., k_r): one multiplicity per marked point of the
// line, all >= 1.
struct Profile {
    std::vector<int> parts;

    Profile() = default;
    explicit Profile(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        if (parts.empty()) throw error("Profile: needs at least one part");
        for (int k : parts)
            if (k < 1) throw error("Profile: parts must be >= 1");
    }

    int r() const { return int(parts.size()); }
    int k() const {
        int s = 0;
        for (int v : parts) s += v;
        return s;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }

    friend bool operator==(const Profile& a, const Profile& b) { return a.parts == b.parts; }
};

// Defining equations of the aligned ordered Hilbert scheme of line sections,
// in chart coordinates plus one alignment coordinate z_j per marked point.
template <class K>
struct OHPresentation {
    VarSetPtr vars;      // chart variables first, then z1..zr
    int chart_dim = 0;   // number of chart variables
    Profile profile;
    int c = 0;           // number of generators
    std::vector<MPoly<K>> equations;  // c*k, generator-major, h_0..h_{k-1} inside
    std::vector<std::string> labels;  // "g{s}.h{l}" matching equations

    int k() const { return profile.k(); }
    int expected_codim() const { return c * profile.k(); }
    int expected_dim() const { return chart_dim + profile.r() - expected_codim(); }
};

// Builds the presentation from generators pulled to a line chart.  Each
// generator must live in (chart variables..., z) with z named by line_var.
// For every generator g the equations are the k coefficients h_0..h_{k-1} of
// the remainder of g modulo prod_j (z - z_j)^{k_j}, the z_j symbolic.
template <class K>
OHPresentation<K> oh_equations(const std::vector<MPoly<K>>& gens, const Profile& profile,
                               const std::string& line_var, const K& one) {
    if (gens.empty()) throw error("oh_equations: no generators");
    profile.validate();
    const VarSetPtr& gvars = gens[0].vars();
    for (const auto& g : gens)
        if (!(*g.vars() == *gvars)) throw error("oh_equations: generators disagree on variables");
    const int zidx = gvars->index_of(line_var);

    // chart variables = everything except z, in order
    std::vector<std::string> chart_names;
    for (int i = 0; i < gvars->size(); ++i)
        if (i != zidx) chart_names.push_back(gvars->name(i));

    std::vector<std::string> all_names = chart_names;
    all_names.push_back(line_var);
    std::vector<std::string> zi_names;
    for (int j = 1; j <= profile.r(); ++j) {
        zi_names.push_back(line_var + std::to_string(j));
        all_names.push_back(zi_names.back());
    }
    VarSetPtr work = make_varset(all_names);  // throws on collisions with chart names

    std::vector<std::string> out_names = chart_names;
    for (const auto& n : zi_names) out_names.push_back(n);
    VarSetPtr out = make_varset(out_names);

    const int wz = work->index_of(line_var);
    std::vector<int> wzi;
    for (const auto& n : zi_names) wzi.push_back(work->index_of(n));

    OHPresentation<K> pres;
    pres.vars = out;
    pres.chart_dim = int(chart_names.size());
    pres.profile = profile;
    pres.c = int(gens.size());
    for (size_t s = 0; s < gens.size(); ++s) {
        MPoly<K> g = gens[s].extend_to(work);
        auto h = rem_mod_product(g, wz, wzi, profile.parts, one);
        for (size_t l = 0; l < h.size(); ++l) {
            pres.equations.push_back(h[l].restrict_to(out));
            pres.labels.push_back("g" + std::to_string(s + 1) + ".h" + std::to_string(l));
        }
    }
    return pres;
}

struct OracleVerdict {
    bool smooth = false;   // smooth of expected dimension at the point
    int rank = 0;
    int expected_rank = 0;  // c*k
    int expected_dim = 0;
};

// Exact first-order test at a point of the scheme: evaluates all equations
// (zero tolerance) and computes the rank of the Jacobian there.  The point
// lists values for every presentation variable, chart first, then the z_j.
template <class K>
OracleVerdict jacobian_oracle(const OHPresentation<K>& pres, const std::vector<K>& point) {
    if (int(point.size()) != pres.vars->size())
        throw error("jacobian_oracle: point arity mismatch");
    for (size_t i = 0; i < pres.equations.size(); ++i) {
        K v = pres.equations[i].eval(point);
        if (!is_zero(v))
            throw error("jacobian_oracle: point is not on the scheme (equation " +
                        pres.labels[i] + " evaluates to " + to_coeff_string(v) + ")");
    }
    Matrix<K> jac;
    jac.reserve(pres.equations.size());
    for (const auto& eq : pres.equations) {
        std::vector<K> row;
        row.reserve(size_t(pres.vars->size()));
        for (int v = 0; v < pres.vars->size(); ++v) row.push_back(eq.derivative(v).eval(point));
        jac.push_back(std::move(row));
    }
    OracleVerdict verdict;
    verdict.expected_rank = pres.expected_codim();
    verdict.expected_dim = pres.expected_dim();
    verdict.rank = jac.empty() ? 0 : rank(std::move(jac));
    verdict.smooth = verdict.rank == verdict.expected_rank;
    return verdict;
}

// Coincident-point comparison: evaluates the oracle once with the profile as
// given and once with coincident marked points merged (multiplicities summed,
// first-occurrence order).  Points are the z_j values; chart_values the chart
// coordinates.  Returns {split verdict, merged verdict, merged profile}.
template <class K>
struct MergeCheck {
    OracleVerdict split;
    OracleVerdict merged;
    Profile merged_profile;
    std::vector<K> merged_points;
};

template <class K>
MergeCheck<K> merge_profile_check(const std::vector<MPoly<K>>& gens, const Profile& profile,
                                  const std::string& line_var, const std::vector<K>& chart_values,
                                  const std::vector<K>& points, const K& one) {
    if (int(points.size()) != profile.r())
        throw error("merge_profile_check: point count does not match the profile");
    auto split_pres = oh_equations(gens, profile, line_var, one);
    std::vector<K> split_point = chart_values;
    for (const auto& a : points) split_point.push_back(a);

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
    Profile merged(mparts);
    auto merged_pres = oh_equations(gens, merged, line_var, one);
    std::vector<K> merged_point = chart_values;
    for (const auto& a : mpts) merged_point.push_back(a);

    MergeCheck<K> out;
    out.split = jacobian_oracle(split_pres, split_point);
    out.merged = jacobian_oracle(merged_pres, merged_point);
    out.merged_profile = merged;
    out.merged_points = mpts;
    return out;
}

}  // namespace multisec
