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

#ifndef QCUT_BENCH_H
#define QCUT_BENCH_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qcut/cutting.h"
#include "qcut/decompose.h"
#include "qcut/simulator.h"

namespace qcut {

/// Bytes per amplitude for complex64 accounting and complex128 compute.
inline constexpr uint64_t kComplex64Bytes = 8;
inline constexpr uint64_t kComplex128Bytes = 16;

/// Fragment buffers live per executed term: one input and one output state.
inline constexpr uint64_t kLivePairMultiplier = 2;

struct MemoryEstimate {
    std::vector<size_t> dims;
    std::optional<size_t> boundary;
    uint64_t bytes_per_amp = kComplex64Bytes;
    /// product(dims) * bytes_per_amp.
    uint64_t full_bytes = 0;
    /// Sum over fragments of product(fragment dims) * bytes_per_amp; equals
    /// full_bytes when there is no cut.
    uint64_t fragment_bytes = 0;

    /// fragment_bytes * terms * kLivePairMultiplier.
    uint64_t working_set_bytes(uint64_t terms) const;
};

/// Exact integer accounting; throws std::overflow_error if a count does not fit.
MemoryEstimate estimate_memory(
    std::span<const size_t> dims, std::optional<size_t> boundary, uint64_t bytes_per_amp = kComplex64Bytes);

struct BenchRecord {
    std::vector<size_t> dims;
    size_t boundary = 0;
    DecompositionMethod method = DecompositionMethod::GellMann;
    double threshold = 0;
    size_t threads = 1;
    size_t term_count = 0;
    size_t pair_count = 0;
    size_t fragment_runs = 0;
    double tvd = 0;
    double raw_norm = 0;
    double residual = 0;
    CutTimings timings;
    MemoryEstimate memory;
};

/// Runs decompose -> fragment -> stitch -> TVD against the uncut simulation once
/// per threshold. The gate is decomposed once at threshold 0 and truncated per entry.
std::vector<BenchRecord> truncation_sweep(
    const Circuit &circuit, size_t boundary, DecompositionMethod method, std::span<const double> thresholds,
    size_t threads = 1);

struct SpeedupReport {
    std::vector<size_t> dims;
    size_t boundary = 0;
    size_t pair_count = 0;
    std::vector<double> uncut_s;
    std::vector<double> cut_s;
    double mean_uncut_s = 0;
    double mean_cut_s = 0;
    /// mean(uncut) / mean(cut).
    double speedup = 0;
};

/// Times the monolithic simulation against the full Schmidt cut pipeline.
SpeedupReport speedup_report(const Circuit &circuit, size_t boundary, size_t repetitions, size_t threads = 1);

/// Header: dims,boundary,method,threshold,threads,term_count,pair_count,fragment_runs,
/// tvd,raw_norm,residual,decompose_s,simulate_s,stitch_s,uncut_s,bytes_per_amp,full_bytes,fragment_bytes
void write_sweep_csv(std::ostream &out, std::span<const BenchRecord> records);

/// Header: rep,uncut_s,cut_s,speedup; one row per repetition then a "mean" row.
void write_speedup_csv(std::ostream &out, const SpeedupReport &report);

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Minimal standalone SVG line plot with linear axes.
void write_svg_plot(
    std::ostream &out, const std::string &title, const std::string &x_label, const std::string &y_label,
    std::span<const PlotSeries> series);

/// "2x2x3x3" style dims string used in CSV rows.
std::string dims_string(std::span<const size_t> dims, char sep = 'x');

}  // namespace qcut

#endif
