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

#include "multisec/arith.hpp"
#include "multisec/mpoly.hpp"
#include "multisec/projective.hpp"

namespace multisec {

// A projective variety X in P^N given by homogeneous generators over Q.  The
// generator count may exceed the codimension (the ideal need not be a
// complete intersection); codim records the expected codimension c.
struct ImplicitVariety {
    std::string name;
    int N = 0;
    int codim = 1;
    VarSetPtr vars;  // X0..XN
    std::vector<MPoly<Rational>> gens;

    void validate() const;
};

// The same variety with coefficients reduced mod p.
struct FpVariety {
    std::string name;
    int N = 0;
    int codim = 1;
    PrimeField F;
    VarSetPtr vars;
    std::vector<MPoly<Fp>> gens;
};

// Conventional variable names X0..XN.
VarSetPtr projective_vars(int N);

// Coefficient reduction; fails if any denominator is divisible by p.
MPoly<Fp> reduce_poly_mod(const MPoly<Rational>& f, const PrimeField& F);
FpVariety reduce_mod(const ImplicitVariety& X, std::int64_t p);

// Whether every generator vanishes at the point.
bool on_variety(const FpVariety& X, const std::vector<Fp>& pt);

// All F_p-rational points of X, as canonical representatives.
std::vector<std::vector<Fp>> rational_points(const FpVariety& X);

// Rank of the ambient Jacobian (rows = generators, columns = X0..XN) at pt.
int ambient_jacobian_rank(const FpVariety& X, const std::vector<Fp>& pt);

// Generators in the affine chart attached to the frame M: substitutes
// X = M Y and sets Y_0 = 1, producing polynomials in (x1..x_{N-1}, z) where
// x_i = Y_i and z = Y_N.  The frame's first column becomes the chart origin
// (z = 0 on the line {x = 0}) and the last column the point at infinity.
std::vector<MPoly<Fp>> chart_generators(const FpVariety& X, const Matrix<Fp>& M);

// Variable names for the chart above, matching the standard line chart.
VarSetPtr chart_ambient_vars(int N);

}  // namespace multisec
