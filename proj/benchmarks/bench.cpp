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

#include <benchmark/benchmark.h>

#include "multisec/census.hpp"
#include "multisec/gallery.hpp"
#include "multisec/poly_text.hpp"

using namespace multisec;

namespace {

FpVariety cubic_mod(std::int64_t p) { return reduce_mod(*builtin("twisted-cubic").implicit, p); }

// Affine graph system of the degree 3 curve along the z axis.
template <class K>
std::vector<MPoly<K>> cubic_graph_system(const LineChart<K>& ch, const K& one) {
    return {parse_poly<K>("x1 - z^2", ch.ambient, one), parse_poly<K>("x2 - z^3", ch.ambient, one)};
}

void BM_symbolic_remainder(benchmark::State& state) {
    auto ch = make_standard_chart<Rational>(3);
    std::vector<MPoly<Rational>> pulled;
    for (const auto& g : cubic_graph_system(ch, Rational(1)))
        pulled.push_back(pull_to_chart(g, ch, Rational(1)));
    Profile profile({2, 1});
    for (auto _ : state) {
        auto pres = oh_equations(pulled, profile, "z", Rational(1));
        benchmark::DoNotOptimize(pres.equations.data());
    }
}
BENCHMARK(BM_symbolic_remainder);

void BM_line_classification(benchmark::State& state) {
    auto X = cubic_mod(11);
    const PrimeField& F = X.F;
    std::vector<Fp> beta = {F.make(1), F.make(0), F.make(0), F.make(1)};
    std::vector<Fp> dir = {F.make(1), F.make(3), F.make(9), F.make(5)};
    for (auto _ : state) {
        auto prof = line_profile(X, beta, dir);
        benchmark::DoNotOptimize(prof.mults.data());
    }
}
BENCHMARK(BM_line_classification);

void BM_point_census(benchmark::State& state) {
    auto X = cubic_mod(std::int64_t(state.range(0)));
    const PrimeField& F = X.F;
    std::vector<Fp> beta = {F.make(1), F.make(0), F.make(0), F.make(1)};
    for (auto _ : state) {
        auto counts = census_through_point(X, beta);
        benchmark::DoNotOptimize(counts.lines_total);
    }
}
BENCHMARK(BM_point_census)->Arg(7)->Arg(11)->Arg(13);

void BM_modular_rank(benchmark::State& state) {
    PrimeField F(10007);
    Rng rng(5);
    const int n = int(state.range(0));
    Matrix<Fp> m(size_t(n), std::vector<Fp>(size_t(n), F.make(0)));
    for (auto& row : m)
        for (auto& e : row) e = F.make(rng.int_in(0, F.p() - 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m));
    }
}
BENCHMARK(BM_modular_rank)->Arg(16)->Arg(64);

void BM_generator_normalization(benchmark::State& state) {
    PrimeField F(13);
    auto ch = make_standard_chart<Fp>(3);
    auto gens = cubic_graph_system(ch, F.make(1));
    std::vector<Fp> points = {F.make(1), F.make(2)};
    for (auto _ : state) {
        auto ns = normalize_generators(gens, points, Rng(7));
        benchmark::DoNotOptimize(ns.d.degree());
    }
}
BENCHMARK(BM_generator_normalization);

}  // namespace

BENCHMARK_MAIN();
