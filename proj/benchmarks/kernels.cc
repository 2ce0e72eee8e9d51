// Copyright 2026 The qcut Authors
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

#include <vector>

#include "qcut/cutting.h"
#include "qcut/decompose.h"
#include "qcut/gates.h"
#include "qcut/schmidt.h"
#include "qcut/simulator.h"

namespace {

using namespace qcut;

// Args: qudit dimension d, register length n; the gate acts on the middle qudit.
void BM_apply_single(benchmark::State &state) {
    size_t d = static_cast<size_t>(state.range(0));
    std::vector<size_t> dims(static_cast<size_t>(state.range(1)), d);
    auto psi = StateVector::zero_state(dims);
    auto h = hadamard_qudit(d);
    for (auto _ : state) {
        apply_single_inplace(psi.mutable_amps(), dims, h, dims.size() / 2);
        benchmark::DoNotOptimize(psi.mutable_amps().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}
BENCHMARK(BM_apply_single)->Args({2, 20})->Args({3, 12})->Args({8, 6})->Unit(benchmark::kMillisecond);

void BM_apply_csum(benchmark::State &state) {
    size_t d = static_cast<size_t>(state.range(0));
    std::vector<size_t> dims(static_cast<size_t>(state.range(1)), d);
    auto psi = StateVector::zero_state(dims);
    auto u = csum(d, d);
    size_t hi = dims.size() / 2 - 1;
    for (auto _ : state) {
        apply_two_inplace(psi.mutable_amps(), dims, u, hi, hi + 1);
        benchmark::DoNotOptimize(psi.mutable_amps().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}
BENCHMARK(BM_apply_csum)->Args({2, 20})->Args({8, 6})->Unit(benchmark::kMillisecond);

void BM_decompose_gellmann(benchmark::State &state) {
    size_t d = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_csum(d, d, 0));
    }
}
BENCHMARK(BM_decompose_gellmann)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_decompose_schmidt(benchmark::State &state) {
    size_t d = static_cast<size_t>(state.range(0));
    auto u = csum(d, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_schmidt(u, d, d, 0));
    }
}
BENCHMARK(BM_decompose_schmidt)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_stitch(benchmark::State &state) {
    size_t d = static_cast<size_t>(state.range(0));
    auto method = state.range(1) ? DecompositionMethod::Schmidt : DecompositionMethod::GellMann;
    auto circuit = reference_circuit({d, d, d, d});
    auto pairs = generate_fragments(circuit, plan_cut(circuit, 2, method));
    auto outputs = execute_fragments(pairs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(combine_fragments(pairs, outputs));
    }
    state.SetLabel(std::to_string(pairs.size()) + " pairs");
}
BENCHMARK(BM_stitch)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMicrosecond);

void BM_cut_pipeline(benchmark::State &state) {
    size_t d = static_cast<size_t>(state.range(0));
    auto circuit = reference_circuit({d, d, d, d});
    auto plan = plan_cut(circuit, 2, DecompositionMethod::Schmidt);
    CutOptions opts{.threads = 1, .reference = false, .build_probability_map = false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(execute_cut(circuit, plan, opts));
    }
}
BENCHMARK(BM_cut_pipeline)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
