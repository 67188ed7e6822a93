/*
   Copyright 2026 The hecke authors

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

#include "hecke/mgs.hpp"
#include "hecke/q_analogs.hpp"
#include "hecke/satake.hpp"
#include "hecke/weight_polytope.hpp"

using namespace hecke;

static void bm_weight_multiplicities_g2(benchmark::State& state) {
    const RootDatum g2 = build_root_system("G2");
    const Weight lam(Coord{state.range(0), 1});
    for (auto _ : state) {
        auto rep = weight_multiplicities(g2, lam);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bm_weight_multiplicities_g2)->Arg(1)->Arg(2)->Arg(3);

static void bm_lusztig_q_analog_b2(benchmark::State& state) {
    const RootDatum b2 = build_root_system("B2");
    const Weight lam(Coord{state.range(0), state.range(0)});
    const Weight mu(Coord{0, 0});
    for (auto _ : state) {
        auto k = lusztig_q_analog(b2, lam, mu);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(bm_lusztig_q_analog_b2)->Arg(1)->Arg(2)->Arg(4);

static void bm_hall_littlewood_b2(benchmark::State& state) {
    const RootDatum b2 = build_root_system("B2");
    const Weight mu(Coord{state.range(0), 1});
    for (auto _ : state) {
        auto p = hall_littlewood(b2, mu);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_hall_littlewood_b2)->Arg(1)->Arg(2);

static void bm_polytope_faces_g2(benchmark::State& state) {
    const RootDatum g2 = build_root_system("G2");
    const RepSum v{{Weight(Coord{1, 0})}};
    for (auto _ : state) {
        auto faces = weight_polytope_faces(g2, v);
        benchmark::DoNotOptimize(faces);
    }
}
BENCHMARK(bm_polytope_faces_g2);

static void bm_principal_trace(benchmark::State& state) {
    const RootDatum d = build_root_system("B2");
    const auto t = principal_parameter(d, 4.0);
    const Weight lam(Coord{2, 2});
    for (auto _ : state) {
        auto tr = tr_lambda(d, t, lam);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(bm_principal_trace);

static void bm_mgs_level_one(benchmark::State& state) {
    const auto d = epipelagic_sl2_datum(3, true, true);
    for (auto _ : state) {
        auto v = check_geometric_supercuspidality(d, 1);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_mgs_level_one);

BENCHMARK_MAIN();
