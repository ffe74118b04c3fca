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

#include "multisec/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace multisec {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw error("Rational: zero denominator in \"" + s + "\"");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw error("Rational: cannot parse \"" + s + "\"");
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---------------------------------------------------------------- F_p

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::int64_t resolve_p(Fp a, Fp b, const char* op) {
    if (a.p == b.p) return a.p;
    if (a.p == 0) return b.p;
    if (b.p == 0) return a.p;
    throw error(std::string("F_p: mixed moduli ") + std::to_string(a.p) + " and " +
                std::to_string(b.p) + " in " + op);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw error("F_p: modulus not prime in inverse");
    return t < 0 ? t + p : t;
}

}  // namespace

Fp operator+(Fp a, Fp b) {
    std::int64_t p = resolve_p(a, b, "+");
    if (p == 0) return Fp{};
    std::int64_t r = a.r + b.r;
    if (r >= p) r -= p;
    return Fp{r, p};
}

Fp operator-(Fp a, Fp b) {
    std::int64_t p = resolve_p(a, b, "-");
    if (p == 0) return Fp{};
    std::int64_t r = a.r - b.r;
    if (r < 0) r += p;
    return Fp{r, p};
}

Fp operator*(Fp a, Fp b) {
    std::int64_t p = resolve_p(a, b, "*");
    if (p == 0) return Fp{};
    return Fp{(a.r * b.r) % p, p};
}

Fp operator/(Fp a, Fp b) {
    std::int64_t p = resolve_p(a, b, "/");
    if (b.r == 0) throw error("F_p: division by zero");
    return a * Fp{inv_mod(b.r, p), p};
}

Fp operator-(Fp a) {
    if (a.p == 0 || a.r == 0) return Fp{0, a.p};
    return Fp{a.p - a.r, a.p};
}

bool operator==(Fp a, Fp b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p)
        throw error("F_p: mixed moduli in comparison");
    return a.r == b.r;
}

Fp inverse(Fp a) {
    if (a.r == 0) throw error("F_p: division by zero");
    return Fp{inv_mod(a.r, a.p), a.p};
}

Fp pow(Fp a, std::int64_t e) {
    if (e < 0) return pow(inverse(a), -e);
    if (a.p == 0) return e == 0 ? throw error("F_p: 0^0 without context") : Fp{};
    Fp result{1 % a.p, a.p};
    Fp base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Fp one_like(Fp a) {
    if (a.p == 0) throw error("F_p: context-free element has no unit");
    return Fp{1 % a.p, a.p};
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw error("PrimeField: " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t(1) << 31)) throw error("PrimeField: modulus too large");
}

Fp PrimeField::make(std::int64_t n) const {
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return Fp{r, p_};
}

Fp PrimeField::from_mpz(const mpz_class& z) const {
    mpz_class m = z % p_;
    std::int64_t r = m.get_si();
    if (r < 0) r += p_;
    return Fp{r, p_};
}

Fp PrimeField::from_rational(const Rational& q) const {
    Fp den = from_mpz(q.denominator());
    if (den.r == 0)
        throw error("PrimeField: denominator of " + q.str() + " vanishes mod " + std::to_string(p_));
    return from_mpz(q.numerator()) / den;
}

// ---------------------------------------------------------------- F_{p^e}

namespace {

// Dense univariate arithmetic over F_p on int64 coefficient vectors,
// low-to-high, used only for modulus search and Fpe reduction.
using ZPoly = std::vector<std::int64_t>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ztrim(r);
    return r;
}

// Remainder modulo a monic divisor.
ZPoly zrem(ZPoly a, const ZPoly& m, std::int64_t p) {
    ztrim(a);
    const int dm = int(m.size()) - 1;
    while (int(a.size()) - 1 >= dm) {
        std::int64_t lead = a.back();
        int shift = int(a.size()) - 1 - dm;
        if (lead != 0) {
            for (int i = 0; i <= dm; ++i) {
                auto& c = a[size_t(i + shift)];
                c = (c - lead * m[size_t(i)]) % p;
                if (c < 0) c += p;
            }
        }
        a.pop_back();
        ztrim(a);
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b, std::int64_t p) {
    ztrim(a);
    ztrim(b);
    while (!b.empty()) {
        // make b monic for the remainder step
        std::int64_t inv = inv_mod(b.back(), p);
        ZPoly bm = b;
        for (auto& c : bm) c = (c * inv) % p;
        ZPoly r = zrem(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^steps) mod m, via repeated p-th powering.
ZPoly zfrobenius_power(const ZPoly& m, std::int64_t p, int steps) {
    ZPoly x = {0, 1};
    ZPoly acc = zrem(x, m, p);
    for (int s = 0; s < steps; ++s) {
        // acc <- acc^p mod m by square and multiply on the exponent p
        ZPoly result = {1};
        ZPoly base = acc;
        std::int64_t e = p;
        while (e > 0) {
            if (e & 1) result = zrem(zmul(result, base, p), m, p);
            base = zrem(zmul(base, base, p), m, p);
            e >>= 1;
        }
        acc = std::move(result);
    }
    return acc;
}

bool zirreducible(const ZPoly& m, std::int64_t p) {
    const int e = int(m.size()) - 1;
    // x^(p^e) == x mod m
    ZPoly xq = zfrobenius_power(m, p, e);
    ZPoly x = zrem({0, 1}, m, p);
    if (xq != x) return false;
    // gcd(x^(p^(e/q)) - x, m) == 1 for every prime q | e
    for (int q = 2; q <= e; ++q) {
        if (e % q != 0) continue;
        bool qprime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) { qprime = false; break; }
        if (!qprime) continue;
        ZPoly xk = zfrobenius_power(m, p, e / q);
        ZPoly diff = xk;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] - 1) % p;
        if (diff[1] < 0) diff[1] += p;
        ztrim(diff);
        ZPoly g = zgcd(m, diff, p);
        if (int(g.size()) - 1 != 0) return false;
    }
    return true;
}

std::map<std::pair<std::int64_t, int>, ExtensionFieldPtr>& ext_registry() {
    static std::map<std::pair<std::int64_t, int>, ExtensionFieldPtr> reg;
    return reg;
}

std::mutex& ext_registry_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

ExtensionFieldPtr make_extension(std::int64_t p, int e) {
    if (!is_prime(p)) throw error("make_extension: " + std::to_string(p) + " is not prime");
    if (e < 1) throw error("make_extension: degree must be >= 1");
    if (e > 16) throw error("make_extension: degree too large");
    {
        std::lock_guard<std::mutex> lock(ext_registry_mutex());
        auto it = ext_registry().find({p, e});
        if (it != ext_registry().end()) return it->second;
    }

    // Scan monic candidates t^e + sum c_i t^i by counting the non-leading
    // coefficient vector upward, low digit fastest.
    std::vector<std::int64_t> mod;
    double size = 1;
    for (int i = 0; i < e; ++i) size *= double(p);
    if (size > 1e12) throw error("make_extension: field too large to search");
    for (std::int64_t counter = 0;; ++counter) {
        ZPoly cand(size_t(e) + 1, 0);
        cand[size_t(e)] = 1;
        std::int64_t c = counter;
        for (int i = 0; i < e; ++i) {
            cand[size_t(i)] = c % p;
            c /= p;
        }
        if (c != 0) throw error("make_extension: no irreducible found");  // unreachable
        if (e == 1 || zirreducible(cand, p)) {
            mod = std::move(cand);
            break;
        }
    }

    ExtensionFieldPtr field(new ExtensionField(p, e, std::move(mod)));
    std::lock_guard<std::mutex> lock(ext_registry_mutex());
    auto [it, inserted] = ext_registry().emplace(std::make_pair(p, e), field);
    return it->second;
}

bool Fpe::is_zero() const {
    for (auto v : c)
        if (v != 0) return false;
    return true;
}

std::string Fpe::str() const {
    if (!ctx) return "0";
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

Fpe ExtensionField::zero() const {
    return Fpe{std::vector<std::int64_t>(size_t(e_), 0), shared_from_this()};
}

Fpe ExtensionField::one() const { return from_int(1); }

Fpe ExtensionField::generator() const {
    std::vector<std::int64_t> c(size_t(e_), 0);
    if (e_ >= 2) {
        c[1] = 1;
    } else {
        // degree-1 extension: t is a root of the modulus t + c0, so t = -c0
        c[0] = (p_ - mod_[0]) % p_;
    }
    return Fpe{std::move(c), shared_from_this()};
}

Fpe ExtensionField::make(std::vector<std::int64_t> coords) const {
    if (int(coords.size()) != e_) throw error("ExtensionField: wrong coordinate count");
    for (auto& v : coords) {
        v %= p_;
        if (v < 0) v += p_;
    }
    return Fpe{std::move(coords), shared_from_this()};
}

Fpe ExtensionField::embed(Fp a) const {
    if (a.p != 0 && a.p != p_) throw error("ExtensionField: embedding from wrong prime field");
    std::vector<std::int64_t> c(size_t(e_), 0);
    c[0] = a.r % p_;
    return Fpe{std::move(c), shared_from_this()};
}

Fpe ExtensionField::from_int(std::int64_t n) const {
    std::vector<std::int64_t> c(size_t(e_), 0);
    c[0] = n % p_;
    if (c[0] < 0) c[0] += p_;
    return Fpe{std::move(c), shared_from_this()};
}

Fpe ExtensionField::element_at(std::int64_t index) const {
    std::vector<std::int64_t> c(size_t(e_), 0);
    for (int i = 0; i < e_; ++i) {
        c[size_t(i)] = index % p_;
        index /= p_;
    }
    if (index != 0) throw error("ExtensionField: element index out of range");
    return Fpe{std::move(c), shared_from_this()};
}

std::int64_t ExtensionField::order() const {
    std::int64_t n = 1;
    for (int i = 0; i < e_; ++i) {
        if (n > (std::int64_t(1) << 40)) throw error("ExtensionField: order too large");
        n *= p_;
    }
    return n;
}

namespace {

const ExtensionField* resolve_ctx(const Fpe& a, const Fpe& b, const char* op) {
    if (a.ctx && b.ctx) {
        if (a.ctx.get() == b.ctx.get()) return a.ctx.get();
        if (a.ctx->p() == b.ctx->p() && a.ctx->e() == b.ctx->e() &&
            a.ctx->modulus() == b.ctx->modulus())
            return a.ctx.get();
        throw error(std::string("F_{p^e}: mixed contexts in ") + op);
    }
    if (a.ctx) return a.ctx.get();
    if (b.ctx) return b.ctx.get();
    return nullptr;
}

ExtensionFieldPtr ctx_ptr(const Fpe& a, const Fpe& b, const ExtensionField* raw) {
    if (a.ctx && a.ctx.get() == raw) return a.ctx;
    return b.ctx;
}

}  // namespace

Fpe operator+(const Fpe& a, const Fpe& b) {
    const ExtensionField* f = resolve_ctx(a, b, "+");
    if (!f) return Fpe{};
    const std::int64_t p = f->p();
    std::vector<std::int64_t> c(size_t(f->e()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::int64_t av = i < a.c.size() ? a.c[i] : 0;
        std::int64_t bv = i < b.c.size() ? b.c[i] : 0;
        c[i] = (av + bv) % p;
    }
    return Fpe{std::move(c), ctx_ptr(a, b, f)};
}

Fpe operator-(const Fpe& a, const Fpe& b) {
    const ExtensionField* f = resolve_ctx(a, b, "-");
    if (!f) return Fpe{};
    const std::int64_t p = f->p();
    std::vector<std::int64_t> c(size_t(f->e()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::int64_t av = i < a.c.size() ? a.c[i] : 0;
        std::int64_t bv = i < b.c.size() ? b.c[i] : 0;
        c[i] = ((av - bv) % p + p) % p;
    }
    return Fpe{std::move(c), ctx_ptr(a, b, f)};
}

Fpe operator*(const Fpe& a, const Fpe& b) {
    const ExtensionField* f = resolve_ctx(a, b, "*");
    if (!f) return Fpe{};
    if (a.is_zero() || b.is_zero()) {
        return Fpe{std::vector<std::int64_t>(size_t(f->e()), 0), ctx_ptr(a, b, f)};
    }
    ZPoly prod = zmul(a.c, b.c, f->p());
    prod = zrem(std::move(prod), f->modulus(), f->p());
    prod.resize(size_t(f->e()), 0);
    return Fpe{std::move(prod), ctx_ptr(a, b, f)};
}

Fpe operator-(const Fpe& a) {
    if (!a.ctx) return Fpe{};
    const std::int64_t p = a.ctx->p();
    std::vector<std::int64_t> c = a.c;
    for (auto& v : c) v = (p - v) % p;
    return Fpe{std::move(c), a.ctx};
}

bool operator==(const Fpe& a, const Fpe& b) {
    if (a.ctx && b.ctx) {
        resolve_ctx(a, b, "==");  // throws on mismatch
        return a.c == b.c;
    }
    if (!a.ctx && !b.ctx) return true;  // both context-free zeros
    const Fpe& with = a.ctx ? a : b;
    const Fpe& without = a.ctx ? b : a;
    return without.is_zero() ? with.is_zero() : false;
}

Fpe inverse(const Fpe& a) {
    if (!a.ctx || a.is_zero()) throw error("F_{p^e}: division by zero");
    const auto& f = *a.ctx;
    // extended Euclid on (modulus, a) over F_p
    const std::int64_t p = f.p();
    ZPoly r0 = f.modulus(), r1 = a.c;
    ztrim(r1);
    ZPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        ZPoly q;
        ZPoly rem = r0;
        ztrim(rem);
        const int d1 = int(r1.size()) - 1;
        const std::int64_t lead_inv = inv_mod(r1.back(), p);
        while (int(rem.size()) - 1 >= d1 && !rem.empty()) {
            const int shift = int(rem.size()) - 1 - d1;
            const std::int64_t coef = (rem.back() * lead_inv) % p;
            if (int(q.size()) < shift + 1) q.resize(size_t(shift) + 1, 0);
            q[size_t(shift)] = coef;
            for (int i = 0; i <= d1; ++i) {
                auto& c = rem[size_t(i + shift)];
                c = ((c - coef * r1[size_t(i)]) % p + p) % p;
            }
            ztrim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        ZPoly qs1 = zmul(q, s1, p);
        ZPoly s2(std::max(s0.size(), qs1.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            std::int64_t v0 = i < s0.size() ? s0[i] : 0;
            std::int64_t v1 = i < qs1.size() ? qs1[i] : 0;
            s2[i] = ((v0 - v1) % p + p) % p;
        }
        ztrim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since the modulus is irreducible)
    if (int(r0.size()) != 1) throw error("F_{p^e}: modulus not irreducible");
    const std::int64_t scale = inv_mod(r0[0], p);
    for (auto& v : s0) v = (v * scale) % p;
    s0.resize(size_t(f.e()), 0);
    return Fpe{std::move(s0), a.ctx};
}

Fpe operator/(const Fpe& a, const Fpe& b) { return a * inverse(b); }

Fpe pow(const Fpe& a, std::int64_t n) {
    if (!a.ctx) {
        if (n == 0) throw error("F_{p^e}: 0^0 without context");
        return Fpe{};
    }
    if (n < 0) return pow(inverse(a), -n);
    Fpe result = a.ctx->one();
    Fpe base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Fpe frobenius(const Fpe& a) {
    if (!a.ctx) return a;
    return pow(a, a.ctx->p());
}

Fpe zero_like(const Fpe& a) {
    if (!a.ctx) return Fpe{};
    return a.ctx->zero();
}

Fpe one_like(const Fpe& a) {
    if (!a.ctx) throw error("F_{p^e}: context-free element has no unit");
    return a.ctx->one();
}

std::int64_t characteristic(const Fpe& a) { return a.ctx ? a.ctx->p() : 0; }

int extension_degree(const Fpe& a) { return a.ctx ? a.ctx->e() : 1; }

int degree_over_prime_field(const Fpe& a) {
    if (!a.ctx) return 1;
    Fpe x = frobenius(a);
    int d = 1;
    while (!(x == a)) {
        x = frobenius(x);
        ++d;
        if (d > a.ctx->e()) throw error("F_{p^e}: Frobenius orbit exceeds field degree");
    }
    return d;
}

}  // namespace multisec
