// Copyright 2026 The addcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against the packed OpenMP kernels.

#include <random>

#include "benchmark/benchmark.h"

#include "addcodes/duality.hpp"
#include "addcodes/kernels.hpp"

using namespace addcodes;
using namespace addcodes::kernels;

namespace {

FpMatrix random_generator(std::uint32_t p, std::size_t k, std::size_t width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> digit(0, p - 1);
    while (true) {
        FpMatrix m(p, k, width);
        for (std::size_t r = 0; r < k; ++r) {
            for (auto &v : m.row(r)) v = static_cast<Residue>(digit(rng));
        }
        if (rank(m) == k) return m;
    }
}

Problem problem(const char *name, std::uint32_t n, std::uint32_t k) {
    const Duality d = named(name);
    return Problem{d.spec().p, d.spec().e, n, k, d.matrix()};
}

void BM_min_weight_reference(benchmark::State &state) {
    const auto gen = random_generator(2, state.range(0), 40, 1);
    for (auto _ : state) benchmark::DoNotOptimize(min_weight_reference(gen, 2));
}

void BM_min_weight_parallel(benchmark::State &state) {
    const auto gen = random_generator(2, state.range(0), 40, 1);
    for (auto _ : state) benchmark::DoNotOptimize(min_weight_parallel(gen, 2, static_cast<int>(state.range(1))));
}

void BM_exhaustive_reference(benchmark::State &state) {
    const auto prob = problem("D1", 4, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_reference(prob));
}

void BM_exhaustive_parallel(benchmark::State &state) {
    const auto prob = problem("D1", 4, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_parallel(prob, static_cast<int>(state.range(1))));
}

void BM_random_reference(benchmark::State &state) {
    const auto prob = problem("M1", 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(random_reference(prob, state.range(0), 7));
}

void BM_random_parallel(benchmark::State &state) {
    const auto prob = problem("M1", 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(random_parallel(prob, state.range(0), 7, static_cast<int>(state.range(1))));
}

}  // namespace

BENCHMARK(BM_min_weight_reference)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_weight_parallel)->Args({12, 1})->Args({16, 1})->Args({16, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exhaustive_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exhaustive_parallel)->Args({3, 1})->Args({4, 1})->Args({4, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_random_reference)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_random_parallel)->Args({20000, 1})->Args({20000, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
