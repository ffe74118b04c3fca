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
#include <utility>
#include <vector>

#include "multisec/arith.hpp"
#include "multisec/upoly.hpp"

namespace multisec {

// One irreducible factor, recorded by degree only.  Equal-degree splitting is
// never performed: every consumer works from (degree, multiplicity) data.
struct FactorEntry {
    int degree = 0;
    int multiplicity = 0;
    friend bool operator==(const FactorEntry& a, const FactorEntry& b) {
        return a.degree == b.degree && a.multiplicity == b.multiplicity;
    }
    friend bool operator<(const FactorEntry& a, const FactorEntry& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.multiplicity < b.multiplicity;
    }
};

using FactorProfile = std::vector<FactorEntry>;  // kept sorted

namespace detail {

template <class K>
int ext_degree_of(const K&) { return 1; }
inline int ext_degree_of(const Fpe& a) { return extension_degree(a); }

// a^(1/p) over F_{p^e}: apply Frobenius e-1 times.
template <class K>
K pth_root(const K& a) {
    std::int64_t p = characteristic(a);
    if (p == 0) throw error("pth_root: characteristic zero");
    int e = ext_degree_of(a);
    K x = a;
    for (int i = 0; i < e - 1; ++i) {
        K y = x;
        // y = x^p by binary powering
        K acc = one_like(x);
        K base = x;
        std::int64_t n = p;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        x = acc;
        (void)y;
    }
    return x;
}

template <class K>
UPoly<K> mulmod(const UPoly<K>& a, const UPoly<K>& b, const UPoly<K>& m) {
    auto [q, r] = divrem(a * b, m);
    return r;
}

// h^p mod m (p = characteristic), by binary powering on the exponent.
template <class K>
UPoly<K> pow_p_mod(const UPoly<K>& h, std::int64_t p, const UPoly<K>& m) {
    UPoly<K> result = UPoly<K>::constant(one_like(m.lc()));
    UPoly<K> base = h;
    std::int64_t n = p;
    while (n > 0) {
        if (n & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        n >>= 1;
    }
    return result;
}

// h^q mod m with q = p^e, via e rounds of p-th powers.
template <class K>
UPoly<K> pow_q_mod(const UPoly<K>& h, std::int64_t p, int e, const UPoly<K>& m) {
    UPoly<K> acc = h;
    for (int i = 0; i < e; ++i) acc = pow_p_mod(acc, p, m);
    return acc;
}

}  // namespace detail

// Squarefree decomposition of a nonzero polynomial: pairwise-coprime monic
// squarefree parts with their multiplicities.  Works in characteristic zero
// and over finite fields (the derivative-zero branch takes p-th roots).
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decomposition(const UPoly<K>& f_in) {
    if (f_in.is_zero()) throw error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UPoly<K>, int>> result;
    UPoly<K> f = f_in.monic();
    if (f.degree() == 0) return result;

    UPoly<K> fd = f.derivative();
    UPoly<K> c = fd.is_zero() ? f : gcd_monic(f, fd);
    UPoly<K> w = fd.is_zero() ? UPoly<K>::constant(one_like(f.lc())) : divide_exact(f, c);

    int i = 1;
    while (w.degree() > 0) {
        UPoly<K> y = gcd_monic(w, c);
        UPoly<K> part = divide_exact(w, y);
        if (part.degree() > 0) result.emplace_back(part, i);
        w = std::move(y);
        c = divide_exact(c, w);
        ++i;
    }
    if (c.degree() > 0) {
        // c is a p-th power: c = v(x^p)
        std::int64_t p = characteristic(f.lc());
        if (p == 0) throw error("squarefree_decomposition: residual factor in characteristic 0");
        std::vector<K> v(size_t(c.degree() / p) + 1, zero_like(f.lc()));
        for (int d = 0; d <= c.degree(); ++d) {
            K coeff = c.coeff(d);
            if (multisec::is_zero(coeff)) continue;
            if (d % p != 0) throw error("squarefree_decomposition: residual factor is not a p-th power");
            v[size_t(d / p)] = detail::pth_root(coeff);
        }
        for (auto& [g, m] : squarefree_decomposition(UPoly<K>(std::move(v))))
            result.emplace_back(g, m * int(p));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return result;
}

// Distinct-degree split of a squarefree monic polynomial over a finite field:
// (d, product of all monic irreducible factors of degree d).
template <class K>
std::vector<std::pair<int, UPoly<K>>> distinct_degree_split(UPoly<K> f) {
    std::int64_t p = characteristic(f.lc());
    if (p == 0) throw error("distinct_degree_split: needs a finite field");
    int e = detail::ext_degree_of(f.lc());
    std::vector<std::pair<int, UPoly<K>>> result;
    const K one = one_like(f.lc());
    UPoly<K> x = UPoly<K>::monomial(one, 1);
    if (f.degree() <= 0) return result;
    auto [q0, h0] = divrem(x, f);
    UPoly<K> h = h0;  // x mod f
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = detail::pow_q_mod(h, p, e, f);
        UPoly<K> diff = h - (f.degree() >= 1 ? divrem(x, f).second : x);
        if (diff.is_zero()) {
            // every remaining factor has degree dividing d; the loop below
            // still extracts them through the gcd
            diff = UPoly<K>();
        }
        UPoly<K> g = diff.is_zero() ? f : gcd_monic(diff, f);
        if (g.degree() > 0) {
            result.emplace_back(d, g);
            f = divide_exact(f, g);
            if (f.degree() == 0) break;
            h = divrem(h, f).second;
        }
    }
    if (f.degree() > 0) result.emplace_back(f.degree(), f);
    return result;
}

// Factor shape of a nonzero polynomial over a finite field: one entry per
// irreducible factor, (degree, multiplicity), sorted.
template <class K>
FactorProfile factor_profile(const UPoly<K>& f) {
    FactorProfile out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [d, prod] : distinct_degree_split(part)) {
            int count = prod.degree() / d;
            for (int i = 0; i < count; ++i) out.push_back(FactorEntry{d, mult});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Roots living in the coefficient field, with multiplicities, found by
// evaluation over the full field (fields here are small by construction).
template <class K, class ElementRange>
std::vector<std::pair<K, int>> roots_by_scan(const UPoly<K>& f, const ElementRange& elements) {
    if (f.is_zero()) throw error("roots_by_scan: zero polynomial");
    std::vector<std::pair<K, int>> out;
    for (const K& a : elements) {
        if (multisec::is_zero(f.eval(a))) out.emplace_back(a, order_at(f, a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Binary forms F(t0, t1), stored dehomogenized: f(z) = F(1, z) plus the formal
// degree.  The point [0:1] carries multiplicity deg - deg(f).
// ---------------------------------------------------------------------------

template <class K>
struct BinaryForm {
    UPoly<K> f;   // F(1, z)
    int deg = 0;  // formal degree; deg >= f.degree()

    bool is_zero() const { return f.is_zero(); }
    int infinity_multiplicity() const {
        if (f.is_zero()) throw error("BinaryForm: zero form");
        return deg - f.degree();
    }
};

// gcd of a family of binary forms of a common projective line coordinate
// system; zero forms impose nothing and are skipped.  All-zero is an error.
template <class K>
BinaryForm<K> binary_gcd(const std::vector<BinaryForm<K>>& forms) {
    UPoly<K> g;
    int inf = -1;
    bool any = false;
    for (const auto& F : forms) {
        if (F.is_zero()) continue;
        if (F.deg < F.f.degree()) throw error("binary_gcd: formal degree below actual degree");
        g = any ? gcd_monic(g, F.f) : F.f.monic();
        int m = F.infinity_multiplicity();
        inf = any ? std::min(inf, m) : m;
        any = true;
    }
    if (!any) throw error("binary_gcd: all forms vanish identically");
    return BinaryForm<K>{g, g.degree() + inf};
}

template <class K>
BinaryForm<K> binary_gcd(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    return binary_gcd(std::vector<BinaryForm<K>>{a, b});
}

// Factor shape of a binary form: finite-part profile plus a degree-1 entry for
// [0:1] when the form vanishes there.
template <class K>
FactorProfile binary_factor_profile(const BinaryForm<K>& F) {
    if (F.is_zero()) throw error("binary_factor_profile: zero form");
    FactorProfile out;
    if (F.f.degree() > 0) out = factor_profile(F.f);
    int inf = F.infinity_multiplicity();
    if (inf > 0) out.push_back(FactorEntry{1, inf});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace multisec
