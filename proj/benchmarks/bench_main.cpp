/*
   Copyright 2026 The plethys authors

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

#include <complex>

#include <plethys/construct.hpp>
#include <plethys/polylog.hpp>
#include <plethys/verify.hpp>

namespace {

using namespace plethys;

void BM_BuildComplex64(benchmark::State& state) {
    const auto alpha = polylog_alpha({0.0, 0.0});
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto real = build_polynomial(alpha, n);
        benchmark::DoNotOptimize(real.poly.coeffs().data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildComplex64)->RangeMultiplier(2)->Range(1250, 10000)->Complexity();

void BM_BuildRational(benchmark::State& state) {
    const auto alpha = polylog_alpha_rational(0);
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto real = build_polynomial(alpha, n);
        benchmark::DoNotOptimize(real.poly.coeffs().data());
    }
}
BENCHMARK(BM_BuildRational)->Arg(50)->Arg(100)->Arg(200);

void BM_SeriesExpRational(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    std::vector<Rational> h{Rational(0)};
    for (unsigned k = 1; k <= n; ++k) {
        h.push_back(make_rational(-1, static_cast<long>(k)));
    }
    const Series<Rational> hs{h};
    for (auto _ : state) {
        auto f = series_exp(hs);
        benchmark::DoNotOptimize(f.coeffs().data());
    }
}
BENCHMARK(BM_SeriesExpRational)->Arg(32)->Arg(64)->Arg(128);

void BM_FindRootsComplex64(benchmark::State& state) {
    const auto real = build_polynomial(polylog_alpha({0.0, 0.0}),
                                       static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto rm = find_roots(real);
        benchmark::DoNotOptimize(rm.roots.data());
    }
}
BENCHMARK(BM_FindRootsComplex64)->Arg(10)->Arg(20)->Arg(40);

void BM_FindRootsBig256(benchmark::State& state) {
    const auto real = build_polynomial(polylog_alpha({0.0, 0.0}, 256),
                                       static_cast<unsigned>(state.range(0)));
    RootSolveConfig cfg;
    cfg.convergence_tol = std::ldexp(1.0, -226);
    for (auto _ : state) {
        auto rm = find_roots(real, cfg);
        benchmark::DoNotOptimize(rm.roots.data());
    }
}
BENCHMARK(BM_FindRootsBig256)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_NewtonSums(benchmark::State& state) {
    const auto real = build_polynomial(polylog_alpha_rational(0),
                                       static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto sums = power_sums_newton(real, real.nominal_degree);
        benchmark::DoNotOptimize(sums.data());
    }
}
BENCHMARK(BM_NewtonSums)->Arg(30)->Arg(60)->Arg(120);

void BM_ZetaValue(benchmark::State& state) {
    const unsigned bits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto z = zeta_value(2.0, bits);
        benchmark::DoNotOptimize(z.raw());
    }
}
BENCHMARK(BM_ZetaValue)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
