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
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "multisec/arith.hpp"

namespace multisec {

// ---------------------------------------------------------------------------
// Ordered variable set, shared between polynomials.  Two polynomials may be
// combined only when their variable sets agree by value.
// ---------------------------------------------------------------------------

class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw error("VarSet: empty variable name");
            if (!index_.emplace(names_[i], int(i)).second)
                throw error("VarSet: duplicate variable name " + names_[i]);
        }
    }

    int size() const { return int(names_.size()); }
    const std::string& name(int i) const { return names_.at(size_t(i)); }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw error("VarSet: unknown variable " + name);
        return it->second;
    }
    std::optional<int> try_index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<VarSet>(std::move(names));
}

using Exp = std::vector<int>;

inline int total_degree_of(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order on exponent vectors.
struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int ta = total_degree_of(a), tb = total_degree_of(b);
        if (ta != tb) return ta < tb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Multiply a field element by a (possibly negative) machine integer.
template <class K>
K scale_int(const K& a, std::int64_t n) {
    if (n == 0) return zero_like(a);
    bool neg = n < 0;
    std::uint64_t m = neg ? std::uint64_t(-(n + 1)) + 1 : std::uint64_t(n);
    K acc = zero_like(a);
    K base = a;
    while (m > 0) {
        if (m & 1) acc = acc + base;
        base = base + base;
        m >>= 1;
    }
    return neg ? -acc : acc;
}

// ---------------------------------------------------------------------------
// MPoly: exact multivariate polynomial over a field K.  Terms are stored in
// graded-lex order; zero coefficients are never stored.
// ---------------------------------------------------------------------------

template <class K>
class MPoly {
public:
    using Terms = std::map<Exp, K, GrlexLess>;

    explicit MPoly(VarSetPtr vars) : vars_(std::move(vars)) {
        if (!vars_) throw error("MPoly: null variable set");
    }

    static MPoly zero(VarSetPtr vars) { return MPoly(std::move(vars)); }

    static MPoly constant(VarSetPtr vars, const K& c) {
        MPoly f(std::move(vars));
        f.add_term(Exp(size_t(f.vars_->size()), 0), c);
        return f;
    }

    static MPoly variable(VarSetPtr vars, int index, const K& one) {
        MPoly f(vars);
        if (index < 0 || index >= vars->size()) throw error("MPoly: variable index out of range");
        Exp e(size_t(vars->size()), 0);
        e[size_t(index)] = 1;
        f.add_term(std::move(e), one);
        return f;
    }

    const VarSetPtr& vars() const { return vars_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int term_count() const { return int(t_.size()); }

    void add_term(Exp e, const K& c) {
        if (multisec::is_zero(c)) return;
        if (int(e.size()) != vars_->size()) throw error("MPoly: exponent arity mismatch");
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second = it->second + c;
            if (multisec::is_zero(it->second)) t_.erase(it);
        }
    }

    int total_degree() const {
        if (t_.empty()) return -1;
        return total_degree_of(t_.rbegin()->first);
    }

    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e[size_t(var)]);
        return t_.empty() ? -1 : d;
    }

    // Common total degree of all terms; nullopt when zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const {
        if (t_.empty()) return std::nullopt;
        int d = total_degree_of(t_.begin()->first);
        for (const auto& [e, c] : t_)
            if (total_degree_of(e) != d) return std::nullopt;
        return d;
    }

    K constant_term() const {
        Exp e(size_t(vars_->size()), 0);
        auto it = t_.find(e);
        return it == t_.end() ? K{} : it->second;
    }

    K coefficient(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? K{} : it->second;
    }

    // A sample nonzero coefficient, for field-context recovery.
    const K& any_coeff() const {
        if (t_.empty()) throw error("MPoly: zero polynomial has no coefficients");
        return t_.begin()->second;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }

    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.t_) {
            for (const auto& [eb, cb] : b.t_) {
                Exp e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    friend MPoly operator*(const K& c, const MPoly& a) {
        MPoly r(a.vars_);
        for (const auto& [e, v] : a.t_) r.add_term(e, c * v);
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        if (a.t_.size() != b.t_.size()) return false;
        auto ia = a.t_.begin();
        auto ib = b.t_.begin();
        for (; ia != a.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // s-th partial derivative; order -1 (or any negative) yields 0 by convention.
    MPoly derivative(int var, int order = 1) const {
        if (var < 0 || var >= vars_->size()) throw error("MPoly: derivative variable out of range");
        if (order < 0) return MPoly(vars_);
        MPoly f = *this;
        for (int s = 0; s < order; ++s) {
            MPoly d(vars_);
            for (const auto& [e, c] : f.t_) {
                int n = e[size_t(var)];
                if (n == 0) continue;
                Exp e2 = e;
                e2[size_t(var)] -= 1;
                d.add_term(std::move(e2), scale_int(c, n));
            }
            f = std::move(d);
        }
        return f;
    }

    K eval(const std::vector<K>& values) const {
        if (int(values.size()) != vars_->size()) throw error("MPoly: evaluation arity mismatch");
        K acc{};
        for (const auto& [e, c] : t_) {
            K term = c;
            for (size_t i = 0; i < e.size(); ++i) {
                for (int j = 0; j < e[i]; ++j) term = term * values[i];
            }
            acc = acc + term;
        }
        return acc;
    }

    // Simultaneous substitution.  targets[i] (when set) replaces variable i and
    // must live in new_vars; unset targets keep the variable, which must then
    // exist in new_vars under the same name.
    MPoly substitute(const std::vector<std::optional<MPoly>>& targets, VarSetPtr new_vars) const {
        if (int(targets.size()) != vars_->size()) throw error("MPoly: substitution arity mismatch");
        if (t_.empty()) return MPoly(new_vars);
        std::vector<int> passthrough(size_t(vars_->size()), -1);
        for (int i = 0; i < vars_->size(); ++i) {
            if (targets[size_t(i)]) {
                if (!(*targets[size_t(i)]->vars_ == *new_vars))
                    throw error("MPoly: substitution target has wrong variable set");
            } else {
                auto idx = new_vars->try_index_of(vars_->name(i));
                if (!idx) throw error("MPoly: variable " + vars_->name(i) + " missing from target set");
                passthrough[size_t(i)] = *idx;
            }
        }
        // power cache per variable
        std::vector<std::vector<MPoly>> powers(size_t(vars_->size()));
        auto power_of = [&](int var, int n) -> const MPoly& {
            auto& cache = powers[size_t(var)];
            if (cache.empty()) {
                cache.push_back(MPoly::constant(new_vars, one_like_from(*this)));
                if (targets[size_t(var)]) {
                    cache.push_back(*targets[size_t(var)]);
                } else {
                    cache.push_back(MPoly::variable(new_vars, passthrough[size_t(var)],
                                                    one_like_from(*this)));
                }
            }
            while (int(cache.size()) <= n) cache.push_back(cache.back() * cache[1]);
            return cache[size_t(n)];
        };
        MPoly r(new_vars);
        for (const auto& [e, c] : t_) {
            MPoly term = MPoly::constant(new_vars, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term = term * power_of(int(i), e[i]);
            r = r + term;
        }
        return r;
    }

    // Reinterpret in a superset of variables (matched by name).
    MPoly extend_to(VarSetPtr new_vars) const {
        std::vector<int> where(size_t(vars_->size()));
        for (int i = 0; i < vars_->size(); ++i) where[size_t(i)] = new_vars->index_of(vars_->name(i));
        MPoly r(new_vars);
        for (const auto& [e, c] : t_) {
            Exp e2(size_t(new_vars->size()), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[size_t(where[i])] = e[i];
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    // Project to a subset of variables; every dropped variable must have
    // exponent 0 throughout.
    MPoly restrict_to(VarSetPtr new_vars) const {
        std::vector<int> where(size_t(vars_->size()), -1);
        for (int i = 0; i < vars_->size(); ++i) {
            auto idx = new_vars->try_index_of(vars_->name(i));
            if (idx) where[size_t(i)] = *idx;
        }
        MPoly r(new_vars);
        for (const auto& [e, c] : t_) {
            Exp e2(size_t(new_vars->size()), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                if (where[i] >= 0) {
                    e2[size_t(where[i])] = e[i];
                } else if (e[i] != 0) {
                    throw error("MPoly: cannot drop variable " + vars_->name(int(i)) +
                                " with nonzero exponent");
                }
            }
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    // Decompose as a polynomial in one variable: power -> coefficient (the
    // coefficient keeps the full variable set with exponent 0 in var).
    std::map<int, MPoly> coefficients_in(int var) const {
        std::map<int, MPoly> out;
        for (const auto& [e, c] : t_) {
            int d = e[size_t(var)];
            Exp e2 = e;
            e2[size_t(var)] = 0;
            auto it = out.find(d);
            if (it == out.end()) it = out.emplace(d, MPoly(vars_)).first;
            it->second.add_term(std::move(e2), c);
        }
        return out;
    }

private:
    void check_same_vars(const MPoly& b) const {
        if (vars_.get() == b.vars_.get()) return;
        if (!(*vars_ == *b.vars_)) throw error("MPoly: variable sets differ");
    }

    K one_like_from(const MPoly& f) const {
        if (!f.t_.empty()) return one_like(f.t_.begin()->second);
        return one_like(K{});  // throws for context-dependent fields; fine: zero substitution is trivial
    }

    VarSetPtr vars_;
    Terms t_;
};

// Long division by a divisor that is monic in the given variable (its leading
// coefficient with respect to var must be the constant 1).  Returns {quotient,
// remainder} with deg_var(remainder) < deg_var(divisor).
template <class K>
std::pair<MPoly<K>, MPoly<K>> divrem_in_var(const MPoly<K>& f, const MPoly<K>& g, int var) {
    if (g.is_zero()) throw error("divrem_in_var: zero divisor");
    if (!(*f.vars() == *g.vars())) throw error("divrem_in_var: variable sets differ");
    const int dg = g.degree_in(var);
    {
        auto gc = g.coefficients_in(var);
        auto lead = gc.find(dg);
        bool monic = lead != gc.end() && lead->second.term_count() == 1 &&
                     lead->second.terms().begin()->first == Exp(size_t(g.vars()->size()), 0) &&
                     lead->second.terms().begin()->second == one_like(lead->second.any_coeff());
        if (!monic) throw error("divrem_in_var: divisor is not monic in the division variable");
    }
    MPoly<K> q(f.vars());
    MPoly<K> r = f;
    const K one = one_like(g.any_coeff());
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        auto rc = r.coefficients_in(var);
        MPoly<K> lead = rc.at(dr);  // var-degree 0 by construction
        MPoly<K> shift(f.vars());
        {
            Exp e(size_t(f.vars()->size()), 0);
            e[size_t(var)] = dr - dg;
            shift.add_term(std::move(e), one);
        }
        MPoly<K> term = lead * shift;
        q = q + term;
        r = r - term * g;
        if (!r.is_zero() && r.degree_in(var) >= dr)
            throw error("divrem_in_var: leading coefficient failed to cancel");
    }
    return {std::move(q), std::move(r)};
}

// Remainder coefficients of g modulo prod_i (z - z_i)^{k_i}, the divisor kept
// symbolic in the z_i.  Returns h_0, ..., h_{k-1} (k = sum k_i) with
//   g  ==  q * prod_i (z - z_i)^{k_i}  +  sum_l h_l z^l
// and every h_l of z-degree 0.  zvar indexes z, zivars the z_i, all within
// g's variable set; multiplicities k_i must be >= 1.
template <class K>
std::vector<MPoly<K>> rem_mod_product(const MPoly<K>& g, int zvar, const std::vector<int>& zivars,
                                      const std::vector<int>& multiplicities, const K& one) {
    if (zivars.size() != multiplicities.size())
        throw error("rem_mod_product: point/multiplicity count mismatch");
    if (zivars.empty()) throw error("rem_mod_product: empty profile");
    int k = 0;
    for (int m : multiplicities) {
        if (m < 1) throw error("rem_mod_product: multiplicities must be >= 1");
        k += m;
    }
    MPoly<K> divisor = MPoly<K>::constant(g.vars(), one);
    for (size_t i = 0; i < zivars.size(); ++i) {
        MPoly<K> lin = MPoly<K>::variable(g.vars(), zvar, one);
        lin = lin - MPoly<K>::variable(g.vars(), zivars[i], one);
        for (int m = 0; m < multiplicities[i]; ++m) divisor = divisor * lin;
    }
    auto [q, r] = divrem_in_var(g, divisor, zvar);
    auto by_power = r.coefficients_in(zvar);
    std::vector<MPoly<K>> h(size_t(k), MPoly<K>(g.vars()));
    for (auto& [power, coeff] : by_power) {
        if (power >= k) throw error("rem_mod_product: remainder degree out of range");
        h[size_t(power)] = std::move(coeff);
    }
    return h;
}

}  // namespace multisec
