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

#include <string>
#include <vector>

#include "multisec/gallery.hpp"
#include "multisec/variety.hpp"

namespace multisec {

// A parsed variety description.  The document is a JSON object:
//
//   {
//     "name": "my-curve",                      // optional
//     "variables": ["X0", "X1", "X2", "X3"],   // required, distinct names
//     "generators": ["X0*X2 - X1^2", ...],     // exactly one of generators /
//     "parametrization": ["s0^2", ...],        //   parametrization is present
//     "field": "Q",                            // optional; "Q" or a prime
//     "codim": 2                               // optional
//   }
//
// Polynomials are strings in the canonical text format over `variables`.
// When codim is absent it defaults to the generator count (the input is
// assumed to be a complete intersection) for implicit data, and to the
// image codimension N - m for parametrizations.
struct InputDoc {
    std::string name = "input";
    std::vector<std::string> variables;
    std::vector<std::string> generators;
    std::vector<std::string> parametrization;
    std::int64_t p = 0;  // 0 means Q
    int codim = 0;       // 0 means "use the default"
};

InputDoc parse_input_document(const std::string& text);
InputDoc load_input_document(const std::string& path);

// Projective readings: `variables` are homogeneous coordinates on P^N
// (implicit route) or on the source P^m (parametric route).  Both require
// rational coefficients; finite-field reduction happens per census prime.
ImplicitVariety implicit_from_input(const InputDoc& doc);
ParametricVariety parametric_from_input(const InputDoc& doc);

// Affine chart reading for the equation and smoothness commands: the
// variables are chart coordinates and the LAST one is the coordinate z
// along the line.  Exactly one of gens_q / gens_p is populated.
struct ChartInput {
    std::string name;
    VarSetPtr vars;
    std::int64_t p = 0;  // 0 means Q
    std::vector<MPoly<Rational>> gens_q;
    std::vector<MPoly<Fp>> gens_p;
};
ChartInput chart_from_input(const InputDoc& doc);

}  // namespace multisec
