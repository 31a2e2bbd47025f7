// Copyright 2026 The magnonic Authors
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

#include "magnonic/entanglement.hpp"
#include "magnonic/magnon.hpp"
#include "magnonic/models.hpp"
#include "magnonic/state.hpp"

using namespace magnonic;

namespace {

void BM_HeisenbergMatvec(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    const HamiltonianSpec spec{HeisenbergFerro{}, n, Boundary::Periodic};
    const StateVector psi = haar_random(n, 1);
    Amplitudes out(psi.dim());
    for (auto _ : st) {
        apply_hamiltonian(spec, psi.amplitudes(), out);
        benchmark::DoNotOptimize(out.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(psi.dim()));
}
BENCHMARK(BM_HeisenbergMatvec)->Arg(10)->Arg(14)->Arg(18);

void BM_IsingGroundState(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    const HamiltonianSpec spec{TransverseIsing{1.0}, n, Boundary::Periodic};
    GroundOptions opts;
    opts.dense_oracle = false;
    for (auto _ : st) {
        benchmark::DoNotOptimize(ground_state(spec, opts).energy);
    }
}
BENCHMARK(BM_IsingGroundState)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_EntanglementReport(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    const StateVector psi = haar_random(n, 2);
    for (auto _ : st) {
        benchmark::DoNotOptimize(entanglement_report(psi).lambda);
    }
}
BENCHMARK(BM_EntanglementReport)->Arg(8)->Arg(14)->Arg(18);

void BM_MagnonCreate(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    const StateVector psi = haar_random(n, 3);
    const MagnonMode mode = MagnonMode::quantized(n, 1);
    for (auto _ : st) {
        benchmark::DoNotOptimize(magnon_create(psi, mode).norm());
    }
}
BENCHMARK(BM_MagnonCreate)->Arg(8)->Arg(14)->Arg(18);

void BM_CommutatorExpectation(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    const StateVector psi = haar_random(n, 4);
    const MagnonMode mode = MagnonMode::quantized(n, 2);
    for (auto _ : st) {
        benchmark::DoNotOptimize(commutator_expectation(psi, mode));
    }
}
BENCHMARK(BM_CommutatorExpectation)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
