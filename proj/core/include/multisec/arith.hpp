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
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace multisec {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision rational number, always reduced, denominator
// positive.  All arithmetic is exact.
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "a", "-a", "a/b".
    static Rational from_string(const std::string& s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline std::string to_coeff_string(const Rational& a) { return a.str(); }
inline std::int64_t characteristic(const Rational&) { return 0; }

// ---------------------------------------------------------------------------
// Prime fields F_p.  Elements carry their modulus so mixed-context use is
// detected; a default-constructed element is the context-free zero, absorbed
// by any context on first contact.
// ---------------------------------------------------------------------------

bool is_prime(std::int64_t n);

class PrimeField;

struct Fp {
    std::int64_t r = 0;  // canonical residue, 0 <= r < p (0 when p == 0)
    std::int64_t p = 0;  // 0 marks the context-free zero

    bool is_zero() const { return r == 0; }
    std::string str() const { return std::to_string(r); }
};

Fp operator+(Fp a, Fp b);
Fp operator-(Fp a, Fp b);
Fp operator*(Fp a, Fp b);
Fp operator/(Fp a, Fp b);
Fp operator-(Fp a);
bool operator==(Fp a, Fp b);
inline bool operator!=(Fp a, Fp b) { return !(a == b); }

Fp inverse(Fp a);
Fp pow(Fp a, std::int64_t e);

inline bool is_zero(Fp a) { return a.r == 0; }
inline Fp zero_like(Fp a) { return Fp{0, a.p}; }
Fp one_like(Fp a);
inline std::string to_coeff_string(Fp a) { return a.str(); }
inline std::int64_t characteristic(Fp a) { return a.p; }

class PrimeField {
public:
    // Throws unless p is prime (deterministic trial division; moduli are small).
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }
    Fp make(std::int64_t n) const;           // reduces any integer
    Fp from_mpz(const mpz_class& z) const;
    Fp from_rational(const Rational& q) const;  // throws if p divides the denominator
    Fp zero() const { return Fp{0, p_}; }
    Fp one() const { return Fp{1 % p_, p_}; }

private:
    std::int64_t p_;
};

// ---------------------------------------------------------------------------
// Extension fields F_{p^e}.  The defining modulus is the deterministically
// chosen smallest monic irreducible of degree e: candidates are scanned in
// increasing order of the integer sum(c_i p^i) over the non-leading
// coefficients, and the first irreducible wins.  Elements are coordinate
// vectors in the power basis of t.
// ---------------------------------------------------------------------------

class ExtensionField;
using ExtensionFieldPtr = std::shared_ptr<const ExtensionField>;

struct Fpe {
    std::vector<std::int64_t> c;  // size e, entries mod p; empty with null ctx = zero
    ExtensionFieldPtr ctx;

    bool is_zero() const;
    std::string str() const;
};

class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
public:
    std::int64_t p() const { return p_; }
    int e() const { return e_; }
    // Monic defining polynomial, coefficients low-to-high, length e+1.
    const std::vector<std::int64_t>& modulus() const { return mod_; }

    Fpe zero() const;
    Fpe one() const;
    Fpe generator() const;                     // the class of t
    Fpe make(std::vector<std::int64_t> coords) const;
    Fpe embed(Fp a) const;                     // prime-subfield embedding
    Fpe from_int(std::int64_t n) const;

    // All p^e elements in a fixed order (coordinate counter, low digit first).
    Fpe element_at(std::int64_t index) const;
    std::int64_t order() const;                // p^e, throws if it would overflow

    friend ExtensionFieldPtr make_extension(std::int64_t p, int e);

private:
    ExtensionField(std::int64_t p, int e, std::vector<std::int64_t> mod)
        : p_(p), e_(e), mod_(std::move(mod)) {}

    std::int64_t p_;
    int e_;
    std::vector<std::int64_t> mod_;
};

// Builds (and caches) the degree-e extension of F_p.  e >= 1; e == 1 yields
// the trivial extension with modulus t.
ExtensionFieldPtr make_extension(std::int64_t p, int e);

Fpe operator+(const Fpe& a, const Fpe& b);
Fpe operator-(const Fpe& a, const Fpe& b);
Fpe operator*(const Fpe& a, const Fpe& b);
Fpe operator/(const Fpe& a, const Fpe& b);
Fpe operator-(const Fpe& a);
bool operator==(const Fpe& a, const Fpe& b);
inline bool operator!=(const Fpe& a, const Fpe& b) { return !(a == b); }

Fpe inverse(const Fpe& a);
Fpe pow(const Fpe& a, std::int64_t n);
Fpe frobenius(const Fpe& a);  // x -> x^p

inline bool is_zero(const Fpe& a) { return a.is_zero(); }
Fpe zero_like(const Fpe& a);
Fpe one_like(const Fpe& a);
inline std::string to_coeff_string(const Fpe& a) { return a.str(); }
std::int64_t characteristic(const Fpe& a);
int extension_degree(const Fpe& a);

inline std::int64_t characteristic_of(const Rational&) { return 0; }

// Degree of the element over F_p: the size of its Frobenius orbit.
int degree_over_prime_field(const Fpe& a);

}  // namespace multisec
