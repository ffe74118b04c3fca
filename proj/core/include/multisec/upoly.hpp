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

#include <utility>
#include <vector>

#include "multisec/arith.hpp"
#include "multisec/mpoly.hpp"

namespace multisec {

// ---------------------------------------------------------------------------
// UPoly: dense univariate polynomial over a field K.  Coefficients are stored
// low-to-high with no trailing zeros; the zero polynomial is empty and has
// degree -1.
// ---------------------------------------------------------------------------

template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const K& c) { return UPoly(std::vector<K>{c}); }
    static UPoly monomial(const K& c, int degree) {
        if (multisec::is_zero(c)) return UPoly();
        std::vector<K> v(size_t(degree) + 1, zero_like(c));
        v.back() = c;
        return UPoly(std::move(v));
    }
    // x - a
    static UPoly linear_root(const K& a) {
        return UPoly(std::vector<K>{-a, one_like(a)});
    }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(int i) const {
        if (i < 0 || i >= int(c_.size())) return K{};
        return c_[size_t(i)];
    }

    const K& lc() const {
        if (c_.empty()) throw error("UPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(c_.back()); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K{});
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size())
                r[i] = a.c_[i];
            else
                r[i] = b.c_[i];
        }
        return UPoly(std::move(r));
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    UPoly operator-() const {
        std::vector<K> r(c_.size(), K{});
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (multisec::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const K& s, const UPoly& a) {
        std::vector<K> r(a.c_.size(), K{});
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly monic() const {
        if (is_zero()) throw error("UPoly: cannot normalize the zero polynomial");
        K inv = one_like(lc()) / lc();
        return inv * *this;
    }

    // s-th derivative; negative order yields 0 by convention.
    UPoly derivative(int order = 1) const {
        if (order < 0) return UPoly();
        UPoly f = *this;
        for (int s = 0; s < order; ++s) {
            if (f.is_zero()) return f;
            std::vector<K> d;
            d.reserve(f.c_.size());
            for (size_t i = 1; i < f.c_.size(); ++i) d.push_back(scale_int(f.c_[i], std::int64_t(i)));
            f = UPoly(std::move(d));
        }
        return f;
    }

    K eval(const K& at) const {
        K acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    UPoly pow(int n) const {
        if (n < 0) throw error("UPoly: negative power");
        if (n == 0) {
            if (is_zero()) throw error("UPoly: 0^0");
            return UPoly::constant(one_like(c_[0]));
        }
        UPoly acc = *this;
        UPoly result;
        bool started = false;
        int e = n;
        while (e > 0) {
            if (e & 1) {
                result = started ? result * acc : acc;
                started = true;
            }
            acc = acc * acc;
            e >>= 1;
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && multisec::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
bool is_zero(const UPoly<K>& f) { return f.is_zero(); }

// Euclidean division; the divisor's leading coefficient must be invertible.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw error("UPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UPoly<K>(), a};
    const K lead_inv = one_like(b.lc()) / b.lc();
    std::vector<K> rem = a.coeffs();
    std::vector<K> quo(size_t(a.degree() - b.degree()) + 1, zero_like(b.lc()));
    for (int i = a.degree(); i >= b.degree(); --i) {
        K c = rem[size_t(i)] * lead_inv;
        if (!multisec::is_zero(c)) {
            quo[size_t(i - b.degree())] = c;
            for (int j = 0; j <= b.degree(); ++j)
                rem[size_t(i - b.degree() + j)] = rem[size_t(i - b.degree() + j)] - c * b.coeff(j);
        }
    }
    rem.resize(size_t(b.degree() < 0 ? 0 : b.degree()), K{});
    return {UPoly<K>(std::move(quo)), UPoly<K>(std::move(rem))};
}

// Exact division; throws if the remainder is nonzero.
template <class K>
UPoly<K> divide_exact(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw error("UPoly: division is not exact");
    return q;
}

// Monic greatest common divisor; gcd(0,0) is an error.
template <class K>
UPoly<K> gcd_monic(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() && b.is_zero()) throw error("UPoly: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
struct ExtendedGcd {
    UPoly<K> g;  // monic gcd
    UPoly<K> u;  // u*a + v*b = g
    UPoly<K> v;
};

template <class K>
ExtendedGcd<K> egcd(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.is_zero() && b.is_zero()) throw error("UPoly: gcd(0, 0) is undefined");
    UPoly<K> r0 = a, r1 = b;
    const K one = one_like(a.is_zero() ? b.lc() : a.lc());
    UPoly<K> s0 = UPoly<K>::constant(one), s1;
    UPoly<K> t0, t1 = UPoly<K>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        UPoly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UPoly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    K scale = one / r0.lc();
    return ExtendedGcd<K>{scale * r0, scale * s0, scale * t0};
}

// Multiplicity of the root a (0 when f(a) != 0); f must be nonzero.
template <class K>
int order_at(const UPoly<K>& f, const K& a) {
    if (f.is_zero()) throw error("UPoly: order of the zero polynomial is infinite");
    UPoly<K> g = f;
    UPoly<K> lin = UPoly<K>::linear_root(a);
    int ord = 0;
    while (true) {
        auto [q, r] = divrem(g, lin);
        if (!r.is_zero()) return ord;
        ++ord;
        g = std::move(q);
        if (g.is_zero()) throw error("UPoly: order computation exhausted the polynomial");
    }
}

// Taylor coefficients of f at a: f(x) = sum_i out[i] (x-a)^i.
template <class K>
std::vector<K> taylor_at(const UPoly<K>& f, const K& a) {
    std::vector<K> out;
    UPoly<K> g = f;
    UPoly<K> lin = UPoly<K>::linear_root(a);
    if (f.is_zero()) return out;
    while (!g.is_zero()) {
        auto [q, r] = divrem(g, lin);
        out.push_back(r.is_zero() ? K{} : r.coeff(0));
        g = std::move(q);
    }
    return out;
}

// Lagrange interpolation through distinct nodes.
template <class K>
UPoly<K> lagrange_interpolate(const std::vector<K>& nodes, const std::vector<K>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw error("UPoly: interpolation needs matching nonempty node/value lists");
    const K one = one_like(nodes[0]);
    UPoly<K> acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
        UPoly<K> basis = UPoly<K>::constant(one);
        K denom = one;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly<K>::linear_root(nodes[j]);
            denom = denom * (nodes[i] - nodes[j]);
        }
        acc = acc + (values[i] / denom) * basis;
    }
    return acc;
}

// Conversions between a univariate view and the multivariate representation.
template <class K>
UPoly<K> to_upoly(const MPoly<K>& f, int var) {
    std::vector<K> c(size_t(std::max(f.degree_in(var), -1) + 1), K{});
    for (const auto& [e, coeff] : f.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (int(i) != var && e[i] != 0)
                throw error("to_upoly: polynomial involves extra variable " +
                            f.vars()->name(int(i)));
        c[size_t(e[size_t(var)])] = coeff;
    }
    return UPoly<K>(std::move(c));
}

template <class K>
MPoly<K> from_upoly(const UPoly<K>& f, VarSetPtr vars, int var) {
    MPoly<K> r(vars);
    for (int i = 0; i <= f.degree(); ++i) {
        if (multisec::is_zero(f.coeff(i))) continue;
        Exp e(size_t(vars->size()), 0);
        e[size_t(var)] = i;
        r.add_term(std::move(e), f.coeff(i));
    }
    return r;
}

}  // namespace multisec
