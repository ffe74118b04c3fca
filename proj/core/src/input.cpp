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

#include "multisec/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "multisec/poly_text.hpp"

namespace multisec {

namespace {

using Json = nlohmann::json;

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> string_array(const Json& doc, const std::string& key) {
    const Json& a = doc.at(key);
    if (!a.is_array() || a.empty())
        throw error("input: \"" + key + "\" must be a nonempty array of strings");
    std::vector<std::string> out;
    for (const auto& e : a) {
        if (!e.is_string())
            throw error("input: \"" + key + "\" must contain only strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

// Wraps a polynomial parse failure with the offending string and offset.
template <typename K>
std::vector<MPoly<K>> parse_all(const std::vector<std::string>& texts, const VarSetPtr& vars,
                                const K& one, const char* what) {
    std::vector<MPoly<K>> out;
    out.reserve(texts.size());
    for (size_t i = 0; i < texts.size(); ++i) {
        try {
            out.push_back(parse_poly<K>(texts[i], vars, one));
        } catch (const parse_error& ex) {
            throw error(std::string("input: ") + what + "[" + std::to_string(i) +
                        "]: " + ex.what() + " in \"" + texts[i] + "\"");
        }
    }
    return out;
}

}  // namespace

InputDoc parse_input_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw error(std::string("input: ") + ex.what());
    }
    if (!doc.is_object()) throw error("input: expected a JSON object");

    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& k = it.key();
        if (k != "name" && k != "variables" && k != "generators" && k != "parametrization" &&
            k != "field" && k != "codim")
            throw error("input: unknown key \"" + k + "\"");
    }

    InputDoc out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw error("input: \"name\" must be a string");
        out.name = doc["name"].get<std::string>();
        if (out.name.empty()) throw error("input: \"name\" must be nonempty");
    }

    if (!doc.contains("variables")) throw error("input: missing \"variables\"");
    out.variables = string_array(doc, "variables");
    for (size_t i = 0; i < out.variables.size(); ++i) {
        if (!valid_identifier(out.variables[i]))
            throw error("input: bad variable name \"" + out.variables[i] + "\"");
        for (size_t j = 0; j < i; ++j)
            if (out.variables[j] == out.variables[i])
                throw error("input: duplicate variable \"" + out.variables[i] + "\"");
    }

    const bool has_gens = doc.contains("generators");
    const bool has_param = doc.contains("parametrization");
    if (has_gens == has_param)
        throw error("input: exactly one of \"generators\" / \"parametrization\" is required");
    if (has_gens) out.generators = string_array(doc, "generators");
    if (has_param) out.parametrization = string_array(doc, "parametrization");

    if (doc.contains("field")) {
        const Json& f = doc["field"];
        if (f.is_string()) {
            const std::string s = f.get<std::string>();
            if (s != "Q") throw error("input: \"field\" must be \"Q\" or a prime number");
            out.p = 0;
        } else if (f.is_number_integer()) {
            out.p = f.get<std::int64_t>();
            if (out.p < 2) throw error("input: \"field\" must be \"Q\" or a prime number");
            PrimeField check(out.p);  // rejects composites
        } else {
            throw error("input: \"field\" must be \"Q\" or a prime number");
        }
    }

    if (doc.contains("codim")) {
        if (!doc["codim"].is_number_integer() || doc["codim"].get<int>() < 1)
            throw error("input: \"codim\" must be a positive integer");
        out.codim = doc["codim"].get<int>();
    }
    return out;
}

InputDoc load_input_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("input: cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_document(buf.str());
}

ImplicitVariety implicit_from_input(const InputDoc& doc) {
    if (doc.generators.empty())
        throw error("input: \"" + doc.name + "\" has no generators (a parametrization cannot "
                    "be used here)");
    if (doc.p != 0)
        throw error("input: projective varieties must be given over Q; they are reduced "
                    "modulo each working prime");
    ImplicitVariety X;
    X.name = doc.name;
    X.N = int(doc.variables.size()) - 1;
    if (X.N < 2) throw error("input: need at least 3 homogeneous coordinates");
    X.codim = doc.codim > 0 ? doc.codim : int(doc.generators.size());
    X.vars = make_varset(doc.variables);
    X.gens = parse_all<Rational>(doc.generators, X.vars, Rational(1), "generators");
    X.validate();
    return X;
}

ParametricVariety parametric_from_input(const InputDoc& doc) {
    if (doc.parametrization.empty())
        throw error("input: \"" + doc.name + "\" has no parametrization");
    if (doc.p != 0)
        throw error("input: parametrizations must be given over Q; they are reduced modulo "
                    "each working prime");
    ParametricVariety V;
    V.name = doc.name;
    V.m = int(doc.variables.size()) - 1;
    V.N = int(doc.parametrization.size()) - 1;
    V.svars = make_varset(doc.variables);
    V.comps = parse_all<Rational>(doc.parametrization, V.svars, Rational(1), "parametrization");
    V.codim = doc.codim > 0 ? doc.codim : V.N - V.m;
    V.validate();
    return V;
}

ChartInput chart_from_input(const InputDoc& doc) {
    if (doc.generators.empty())
        throw error("input: \"" + doc.name + "\" has no generators (this command needs affine "
                    "chart equations, not a parametrization)");
    if (doc.variables.size() < 2)
        throw error("input: a chart needs at least one coordinate besides the line "
                    "coordinate (the last variable)");
    ChartInput out;
    out.name = doc.name;
    out.p = doc.p;
    out.vars = make_varset(doc.variables);
    if (doc.p == 0) {
        out.gens_q = parse_all<Rational>(doc.generators, out.vars, Rational(1), "generators");
    } else {
        PrimeField F(doc.p);
        out.gens_p = parse_all<Fp>(doc.generators, out.vars, F.make(1), "generators");
    }
    return out;
}

}  // namespace multisec
