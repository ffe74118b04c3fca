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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multisec/factor.hpp"
#include "multisec/hilbert.hpp"
#include "multisec/projective.hpp"
#include "multisec/rng.hpp"
#include "multisec/tangent.hpp"
#include "multisec/variety.hpp"

namespace multisec {

// Geometric intersection class of a line with the variety: each closed point
// of the scheme-theoretic intersection, of residue degree d and multiplicity
// m, contributes d geometric points of multiplicity m.  Lines inside the
// variety carry the distinguished contained marker instead.
struct GeometricProfile {
    std::vector<int> mults;  // sorted descending
    bool contained = false;

    int total() const {
        int s = 0;
        for (int m : mults) s += m;
        return s;
    }
    std::string str() const;
    bool empty() const { return !contained && mults.empty(); }

    static GeometricProfile from_factors(const FactorProfile& fp);
    static GeometricProfile contained_marker();

    friend bool operator==(const GeometricProfile& a, const GeometricProfile& b) {
        return a.contained == b.contained && a.mults == b.mults;
    }
};

// Restriction of a homogeneous polynomial to the line {s P + t Q}, as a
// binary form in (s, t) stored dehomogenized at s = 1 (so Q is the point at
// infinity of the parametrization).
BinaryForm<Fp> restrict_form_to_span(const MPoly<Fp>& F, const LineSpan& line);

// Intersection class of one line, from the gcd of the restricted generators.
GeometricProfile line_profile(const FpVariety& X, const LineSpan& line);
GeometricProfile line_profile(const FpVariety& X, const std::vector<Fp>& beta,
                              const std::vector<Fp>& direction);

// One nontrivially meeting line retained by a census.
struct LineHit {
    std::vector<Fp> direction;
    GeometricProfile profile;
};

struct CensusCounts {
    std::int64_t lines_total = 0;
    std::int64_t empty = 0;      // lines missing the variety entirely
    std::int64_t contained = 0;  // lines inside the variety
    std::map<std::string, std::int64_t> by_profile;  // nonempty classes, keyed by str()
    std::vector<LineHit> hits;                       // lines with total >= 2, census order
};

// Classifies every line through beta (beta must be off the variety).  The
// direction loop may be fanned out over worker threads; the merge is ordered
// by direction index, so results are identical for every thread count.
CensusCounts census_through_point(const FpVariety& X, const std::vector<Fp>& beta,
                                  int threads = 1);

std::int64_t count_with_total_at_least(const CensusCounts& c, int t);
std::int64_t count_profile(const CensusCounts& c, std::vector<int> mults);

// Dimension read off the growth of counts in p: least-squares slope of
// log(count) against log(p), rounded; residual is the distance to the nearest
// integer, flagged above the threshold.
struct DimensionEstimate {
    std::string status;  // "ok" | "empty" | "insufficient"
    int dimension = -1;
    double slope = 0.0;
    double residual = 0.0;
    bool flagged = false;
};

DimensionEstimate dimension_estimate(const std::vector<std::pair<std::int64_t, std::int64_t>>& counts,
                                     double threshold = 0.3);

// A logged attempt at drawing a general point.
struct BetaDraw {
    std::vector<Fp> point;
    bool accepted = false;
    std::string reason;  // rejection reason; empty when accepted
};

// Draws canonical points of P^N(F_p) until the predicate accepts one.  The
// predicate returns an empty string to accept, a rejection reason otherwise.
std::vector<Fp> draw_point(const ProjectiveSpace& ps, Rng& rng,
                           const std::function<std::string(const std::vector<Fp>&)>& reject_reason,
                           std::vector<BetaDraw>& log, int max_draws = 4096);

// The baseline genericity predicate: off the variety.
std::vector<Fp> draw_general_point(const FpVariety& X, Rng& rng, std::vector<BetaDraw>& log,
                                   int max_draws = 4096);

// Subsystem of exactly c generators cutting the same scheme near the marked
// chart points (z-values on the line {x = 0}): matching restriction orders
// and ambient Jacobian rank c there.  Starts with index subsets, then seeded
// random combinations.
std::vector<MPoly<Fp>> select_local_ci(const std::vector<MPoly<Fp>>& gens, int c,
                                       const std::vector<Fp>& points, Rng rng,
                                       int max_attempts = 64);

// Smoothness sampling over the lines through beta realizing the profile.
struct SampleReport {
    int candidates = 0;  // lines whose geometric class realizes the profile
    int tested = 0;      // candidates with a rational marked-point assignment
    int skipped = 0;     // candidates without one (reported, not extrapolated)
    int smooth = 0;
    std::vector<std::string> failures;
};

SampleReport smooth_sample(const FpVariety& X, const std::vector<Fp>& beta, const Profile& want,
                           int max_tests, Rng rng);

// Secant-locus cover: marks every rational point lying on a line whose total
// intersection degree is at least k (contained lines mark everything on them).
struct CoverCount {
    std::int64_t p = 0;
    std::int64_t marked = 0;
    std::int64_t points_total = 0;
    std::int64_t lines_total = 0;
};

CoverCount secant_cover_count(const FpVariety& X, int k, std::int64_t budget = 50'000'000);

}  // namespace multisec
