// Copyright 2026 The quncert Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "quncert/hilbert.hpp"

namespace {

quncert::HermitianObservable random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    quncert::ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = {normal(rng), normal(rng)};
        }
    }
    return quncert::HermitianObservable(m + m.adjoint());
}

void BM_Eigendecomposition(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const auto h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quncert::hermitian_eigendecomposition(h));
    }
}
BENCHMARK(BM_Eigendecomposition)->RangeMultiplier(2)->Range(2, 32);

}  // namespace
