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

#include <cctype>
#include <string>

#include "multisec/arith.hpp"
#include "multisec/mpoly.hpp"

namespace multisec {

class parse_error : public error {
public:
    parse_error(const std::string& msg, int position)
        : error(msg + " (at position " + std::to_string(position) + ")"), position(position) {}
    int position;
};

namespace detail {

// Sign and magnitude hooks so rationals print "a - 3/2*b" while finite-field
// coefficients stay canonical residues joined by '+'.
inline bool coeff_prints_negative(const Rational& c) { return c.sign() < 0; }
inline Rational coeff_magnitude(const Rational& c) { return c.sign() < 0 ? -c : c; }
inline bool coeff_prints_negative(const Fp&) { return false; }
inline Fp coeff_magnitude(const Fp& c) { return c; }
inline bool coeff_prints_negative(const Fpe&) { return false; }
inline Fpe coeff_magnitude(const Fpe& c) { return c; }

inline Rational coeff_from_rational(const Rational& q, const Rational&) { return q; }
inline Fp coeff_from_rational(const Rational& q, const Fp& sample) {
    if (sample.p == 0) throw error("parse: finite-field sample carries no modulus");
    return PrimeField(sample.p).from_rational(q);
}
inline Fpe coeff_from_rational(const Rational& q, const Fpe& sample) {
    if (!sample.ctx) throw error("parse: extension-field sample carries no context");
    return sample.ctx->embed(PrimeField(sample.ctx->p()).from_rational(q));
}

}  // namespace detail

// Canonical text: terms in descending graded-lex order, "*" between factors,
// "^" for powers, rational coefficients as "a/b".
template <class K>
std::string print_poly(const MPoly<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& vars = *f.vars();
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Exp& e = it->first;
        const K& c = it->second;
        bool neg = detail::coeff_prints_negative(c);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        K mag = detail::coeff_magnitude(c);
        bool has_vars = total_degree_of(e) > 0;
        bool unit = mag == one_like(mag);
        if (!has_vars || !unit) out += to_coeff_string(mag);
        if (has_vars) {
            bool lead = !(!has_vars || !unit);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!lead) out += "*";
                lead = false;
                out += vars.name(int(i));
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
    }
    return out;
}

// Parses "x1^2*z - 3/2*x2" style text into the given variable set.  The
// sample supplies the coefficient field context.  Errors carry the offending
// position within the string.
template <class K>
MPoly<K> parse_poly(const std::string& text, VarSetPtr vars, const K& sample) {
    const K one = one_like(sample);
    MPoly<K> result(vars);
    size_t pos = 0;

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto peek = [&]() -> int { return pos < text.size() ? text[pos] : -1; };

    auto read_integer = [&]() -> std::string {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number", int(pos));
        return text.substr(start, pos - start);
    };

    auto read_name = [&]() -> std::string {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    };

    skip_ws();
    if (pos == text.size()) throw parse_error("empty polynomial", 0);

    bool expect_term = true;
    bool negate = false;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (expect_term) throw parse_error("dangling operator", int(pos));
            break;
        }
        if (!expect_term) {
            char op = text[pos];
            if (op == '+') {
                negate = false;
            } else if (op == '-') {
                negate = true;
            } else {
                throw parse_error(std::string("expected '+' or '-', found '") + op + "'", int(pos));
            }
            ++pos;
            expect_term = true;
            continue;
        }
        // leading sign of the very first term
        if (peek() == '-') {
            negate = !negate;
            ++pos;
            skip_ws();
        } else if (peek() == '+') {
            ++pos;
            skip_ws();
        }

        // term: factor (* factor)*
        K coeff = negate ? -one : one;
        Exp exp(size_t(vars->size()), 0);
        bool any_factor = false;
        while (true) {
            skip_ws();
            int c = peek();
            size_t factor_pos = pos;
            if (c == -1) {
                if (!any_factor) throw parse_error("expected a term", int(pos));
                break;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = read_integer();
                std::string den;
                if (peek() == '/') {
                    ++pos;
                    skip_ws();
                    den = read_integer();
                }
                Rational q = Rational::from_string(den.empty() ? num : num + "/" + den);
                coeff = coeff * detail::coeff_from_rational(q, sample);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = read_name();
                auto idx = vars->try_index_of(name);
                if (!idx) throw parse_error("unknown variable '" + name + "'", int(factor_pos));
                int power = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos;
                    skip_ws();
                    power = std::stoi(read_integer());
                }
                exp[size_t(*idx)] += power;
            } else {
                throw parse_error(std::string("unexpected character '") + char(c) + "'",
                                  int(factor_pos));
            }
            any_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        result.add_term(std::move(exp), coeff);
        expect_term = false;
        negate = false;
    }
    return result;
}

}  // namespace multisec
