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

#include <optional>
#include <string>
#include <vector>

#include "multisec/census.hpp"
#include "multisec/variety.hpp"

namespace multisec {

// A variety presented as the image of P^m under an (N+1)-tuple of homogeneous
// forms of common degree.  Every parametric builtin is a closed immersion, so
// rational image points are exactly the images of rational source points.
struct ParametricVariety {
    std::string name;
    int m = 1;
    int N = 0;
    int codim = 1;
    VarSetPtr svars;  // s0..sm
    std::vector<MPoly<Rational>> comps;

    void validate() const;
};

struct FpParametric {
    std::string name;
    int m = 1;
    int N = 0;
    int codim = 1;
    PrimeField F;
    VarSetPtr svars;
    std::vector<MPoly<Fp>> comps;
};

FpParametric reduce_mod(const ParametricVariety& V, std::int64_t p);

// Conventional source variable names s0..sm.
VarSetPtr source_vars(int m);

// Image of a rational source point, normalized.
std::vector<Fp> image_point(const FpParametric& f, const std::vector<Fp>& s);

// All rational image points, each once.
std::vector<std::vector<Fp>> rational_image(const FpParametric& f);

bool on_image(const FpParametric& f, const std::vector<Fp>& pt);

// Intersection class of a line with the image, computed from the pullback of
// the line's defining forms to the source.  Exact over extensions: closed
// points of every residue degree are located and weighted by local
// multiplicity, cross-checked against the pullback scheme's length.
GeometricProfile parametric_line_profile(const FpParametric& f, const LineSpan& line);

CensusCounts parametric_census(const FpParametric& f, const std::vector<Fp>& beta,
                               int threads = 1);

std::vector<Fp> draw_off_image(const FpParametric& f, const ProjectiveSpace& ps, Rng& rng,
                               std::vector<BetaDraw>& log, int max_draws = 4096);

// Tangency pre-checks for a surface in P^4 parametrized by P^2.  The tangent
// scheme of a base point beta is cut out in the source by the maximal minors
// of the parametrization Jacobian extended by the beta row; a general beta
// sees six reduced rational tangency points whose lines each meet the surface
// in a single double point.
std::vector<MPoly<Fp>> tangency_system(const FpParametric& f, const std::vector<Fp>& beta);

struct SteinerCheck {
    bool ok = false;
    std::string reason;
    std::vector<std::vector<Fp>> tangency_sources;  // the six source points when ok
};

SteinerCheck steiner_generic(const FpParametric& f, const std::vector<Fp>& beta);

std::vector<Fp> draw_steiner_point(const FpParametric& f, Rng& rng, std::vector<BetaDraw>& log,
                                   int max_draws = 4096);

// Jacobian rank equals the stated codimension at every rational point; a
// smoothness spot-check for reduced builtins.
bool smooth_at_rational_points(const FpVariety& X);

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

struct Builtin {
    std::string name;
    std::string summary;
    std::optional<ImplicitVariety> implicit;
    std::optional<ParametricVariety> parametric;
};

// Fixed names plus the family "random-ci(N,d1[,d2...],seed)".
Builtin builtin(const std::string& name);

std::vector<std::pair<std::string, std::string>> builtin_catalog();

}  // namespace multisec
