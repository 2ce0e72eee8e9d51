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

#include "qcut/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

using namespace qcut;

namespace {

uint64_t mul_checked(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        throw std::overflow_error("memory estimate overflows 64 bits");
    }
    return a * b;
}

uint64_t amp_count(std::span<const size_t> dims) {
    uint64_t n = 1;
    for (size_t d : dims) {
        n = mul_checked(n, d);
    }
    return n;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double mean(const std::vector<double> &v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Shortest text that reads back to the same double.
std::string num(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

}  // namespace

uint64_t MemoryEstimate::working_set_bytes(uint64_t terms) const {
    return mul_checked(mul_checked(fragment_bytes, terms), kLivePairMultiplier);
}

MemoryEstimate qcut::estimate_memory(
    std::span<const size_t> dims, std::optional<size_t> boundary, uint64_t bytes_per_amp) {
    if (dims.empty()) {
        throw std::invalid_argument("estimate_memory: dims must be non-empty");
    }
    for (size_t d : dims) {
        if (d < 2) {
            throw std::invalid_argument("estimate_memory: dimension must be >= 2, got " + std::to_string(d));
        }
    }
    if (bytes_per_amp == 0) {
        throw std::invalid_argument("estimate_memory: bytes per amplitude must be positive");
    }
    if (boundary && (*boundary == 0 || *boundary >= dims.size())) {
        throw std::invalid_argument(
            "estimate_memory: cut " + std::to_string(*boundary) + " must lie in 1.." + std::to_string(dims.size() - 1));
    }
    MemoryEstimate est;
    est.dims.assign(dims.begin(), dims.end());
    est.boundary = boundary;
    est.bytes_per_amp = bytes_per_amp;
    est.full_bytes = mul_checked(amp_count(dims), bytes_per_amp);
    if (boundary) {
        uint64_t upper = amp_count(dims.first(*boundary));
        uint64_t lower = amp_count(dims.subspan(*boundary));
        est.fragment_bytes = mul_checked(upper, bytes_per_amp) + mul_checked(lower, bytes_per_amp);
    } else {
        est.fragment_bytes = est.full_bytes;
    }
    return est;
}

std::vector<BenchRecord> qcut::truncation_sweep(
    const Circuit &circuit, size_t boundary, DecompositionMethod method, std::span<const double> thresholds,
    size_t threads) {
    CutPlan base = plan_cut(circuit, boundary, method, 0);
    auto t0 = std::chrono::steady_clock::now();
    GateDecomposition full = decompose_crossing_gate(circuit, base);
    double decompose_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::optional<StateVector> uncut = run(circuit);
    double uncut_s = seconds_since(t0);

    MemoryEstimate memory = estimate_memory(circuit.dims, boundary, kComplex128Bytes);
    std::vector<BenchRecord> records;
    for (double tau : thresholds) {
        if (tau < 0 || std::isnan(tau)) {
            throw std::invalid_argument("truncation_sweep: thresholds must be >= 0");
        }
        CutPlan plan = base;
        plan.threshold = tau;
        GateDecomposition dec = truncate(full, tau);
        CutOptions options{threads, false, false};
        StitchedResult r = execute_cut(circuit, plan, dec, options, uncut);
        r.timings.decompose_s = decompose_s;
        r.timings.uncut_s = uncut_s;
        records.push_back(BenchRecord{
            circuit.dims, boundary, method, tau, threads, dec.size(), r.pair_count, r.fragment_runs,
            *r.tvd_vs_uncut, r.raw_norm, dec.residual, r.timings, memory});
    }
    return records;
}

SpeedupReport qcut::speedup_report(const Circuit &circuit, size_t boundary, size_t repetitions, size_t threads) {
    if (repetitions == 0) {
        throw std::invalid_argument("speedup_report: repetitions must be >= 1");
    }
    CutPlan plan = plan_cut(circuit, boundary, DecompositionMethod::Schmidt, 0);
    SpeedupReport report;
    report.dims = circuit.dims;
    report.boundary = boundary;
    CutOptions options{threads, false, false};
    for (size_t rep = 0; rep < repetitions; rep++) {
        auto t0 = std::chrono::steady_clock::now();
        StateVector full = run(circuit);
        report.uncut_s.push_back(seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        StitchedResult cut = execute_cut(circuit, plan, options);
        report.cut_s.push_back(seconds_since(t0));
        report.pair_count = cut.pair_count;
    }
    report.mean_uncut_s = mean(report.uncut_s);
    report.mean_cut_s = mean(report.cut_s);
    report.speedup = report.mean_cut_s > 0 ? report.mean_uncut_s / report.mean_cut_s
                                           : std::numeric_limits<double>::infinity();
    return report;
}

std::string qcut::dims_string(std::span<const size_t> dims, char sep) {
    std::string s;
    for (size_t i = 0; i < dims.size(); i++) {
        if (i) {
            s += sep;
        }
        s += std::to_string(dims[i]);
    }
    return s;
}

void qcut::write_sweep_csv(std::ostream &out, std::span<const BenchRecord> records) {
    out << "dims,boundary,method,threshold,threads,term_count,pair_count,fragment_runs,tvd,raw_norm,residual,"
           "decompose_s,simulate_s,stitch_s,uncut_s,bytes_per_amp,full_bytes,fragment_bytes\n";
    for (const auto &r : records) {
        out << dims_string(r.dims) << ',' << r.boundary << ',' << method_name(r.method) << ',' << num(r.threshold)
            << ',' << r.threads << ',' << r.term_count << ',' << r.pair_count << ',' << r.fragment_runs << ','
            << num(r.tvd) << ',' << num(r.raw_norm) << ',' << num(r.residual) << ',' << num(r.timings.decompose_s)
            << ',' << num(r.timings.simulate_s) << ',' << num(r.timings.stitch_s) << ',' << num(r.timings.uncut_s)
            << ',' << r.memory.bytes_per_amp << ',' << r.memory.full_bytes << ',' << r.memory.fragment_bytes << '\n';
    }
}

void qcut::write_speedup_csv(std::ostream &out, const SpeedupReport &report) {
    out << "rep,uncut_s,cut_s,speedup\n";
    for (size_t i = 0; i < report.uncut_s.size(); i++) {
        double ratio = report.cut_s[i] > 0 ? report.uncut_s[i] / report.cut_s[i] : 0.0;
        out << i << ',' << num(report.uncut_s[i]) << ',' << num(report.cut_s[i]) << ',' << num(ratio) << '\n';
    }
    out << "mean," << num(report.mean_uncut_s) << ',' << num(report.mean_cut_s) << ',' << num(report.speedup) << '\n';
}

void qcut::write_svg_plot(
    std::ostream &out, const std::string &title, const std::string &x_label, const std::string &y_label,
    std::span<const PlotSeries> series) {
    constexpr double width = 640, height = 420, left = 70, right = 20, top = 40, bottom = 60;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto &s : series) {
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = ymin = 0;
        xmax = ymax = 1;
    }
    if (xmax == xmin) {
        xmax = xmin + 1;
    }
    if (ymax == ymin) {
        ymax = ymin + 1;
    }
    auto px = [&](double x) {
        return left + (x - xmin) / (xmax - xmin) * (width - left - right);
    };
    auto py = [&](double y) {
        return height - bottom - (y - ymin) / (ymax - ymin) * (height - top - bottom);
    };
    static constexpr const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(title)
        << "</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
        << height - bottom << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left << "\" y=\"" << height - bottom + 18 << "\" font-size=\"11\">" << xmin << "</text>\n";
    out << "<text x=\"" << width - right << "\" y=\"" << height - bottom + 18
        << "\" font-size=\"11\" text-anchor=\"end\">" << xmax << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << height - bottom << "\" font-size=\"11\" text-anchor=\"end\">"
        << ymin << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << top + 10 << "\" font-size=\"11\" text-anchor=\"end\">" << ymax
        << "</text>\n";
    out << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 20
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << (top + height - bottom) / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << (top + height - bottom) / 2 << ")\">" << xml_escape(y_label)
        << "</text>\n";
    for (size_t i = 0; i < series.size(); i++) {
        const char *color = colors[i % std::size(colors)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (auto [x, y] : series[i].points) {
            out << px(x) << ',' << py(y) << ' ';
        }
        out << "\"/>\n";
        for (auto [x, y] : series[i].points) {
            out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        out << "<text x=\"" << width - right - 4 << "\" y=\"" << top + 16 * (i + 1)
            << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">" << xml_escape(series[i].name)
            << "</text>\n";
    }
    out << "</svg>\n";
}
