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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcut/bench.h"
#include "qcut/cutting.h"
#include "qcut/decompose.h"
#include "qcut/gates.h"
#include "qcut/io.h"
#include "qcut/schmidt.h"
#include "qcut/simulator.h"

namespace qcut::cli {
namespace {

// Relative output paths resolve against $QCUT_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string &path) {
    std::filesystem::path p(path);
    const char *dir = std::getenv("QCUT_OUTPUT_DIR");
    if (p.is_relative() && dir && *dir) {
        return std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(output_path(out_path), text);
    }
}

void require_dimension(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("dimension must be ≥ 2");
    }
}

struct DecomposeArgs {
    std::string gate = "csum";
    std::string input;
    size_t d1 = 2;
    size_t d2 = 2;
    std::string method = "gellmann";
    double threshold = 0;
    std::string out;
};

int do_decompose(const DecomposeArgs &a, std::ostream &out) {
    require_dimension(a.d1);
    require_dimension(a.d2);
    DecompositionMethod method = parse_method(a.method);
    GateDecomposition dec;
    if (a.gate == "csum") {
        dec = method == DecompositionMethod::GellMann ? decompose_csum(a.d1, a.d2, a.threshold)
                                                      : decompose_schmidt(csum(a.d1, a.d2), a.d1, a.d2, a.threshold);
    } else if (a.gate == "file") {
        if (a.input.empty()) {
            throw std::invalid_argument("--gate file requires --input");
        }
        if (method == DecompositionMethod::GellMann) {
            throw std::invalid_argument("gellmann method only decomposes CSUM gates; use --method schmidt");
        }
        auto doc = nlohmann::json::parse(read_text_file(a.input), nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("matrix")) {
            throw std::invalid_argument(a.input + ": expected an object with a \"matrix\" field");
        }
        // Reuse the circuit parser's matrix validation through a one-gate circuit.
        nlohmann::json wrapper = {
            {"dims", {a.d1, a.d2}},
            {"gates", {{{"name", "UNITARY2"}, {"control", 0}, {"target", 1}, {"matrix", doc["matrix"]}}}}};
        Circuit c = parse_circuit_json(wrapper.dump());
        dec = decompose_schmidt(*c.gates[0].matrix, a.d1, a.d2, a.threshold);
    } else {
        throw std::invalid_argument("--gate must be csum or file");
    }
    double max_coeff = 0;
    for (const auto &t : dec.terms) {
        max_coeff = std::max(max_coeff, std::abs(t.coeff));
    }
    std::string recipe = decomposition_to_json(dec);
    if (!a.out.empty()) {
        write_text_file(output_path(a.out), recipe);
    }
    out << "method: " << method_name(dec.method) << "\n";
    out << "terms: " << dec.size() << "\n";
    out << "residual: " << dec.residual << "\n";
    out << "max|coeff|: " << max_coeff << "\n";
    return kExitOk;
}

struct CutArgs {
    std::string circuit;
    size_t boundary = 0;
    std::string method = "gellmann";
    double threshold = 0;
    std::string reference = "uncut";
    std::string out;
    size_t threads = 1;
    bool table = false;
};

int do_cut(const CutArgs &a, std::ostream &out, std::ostream &err) {
    Circuit circuit = load_circuit(a.circuit);
    if (a.reference != "uncut" && a.reference != "none") {
        throw std::invalid_argument("--reference must be uncut or none");
    }
    CutPlan plan;
    try {
        plan = plan_cut(circuit, a.boundary, parse_method(a.method), a.threshold);
    } catch (const CutPlanError &e) {
        err << "error: " << e.what() << "\n";
        for (size_t g : e.crossing_gates) {
            const auto &gate = circuit.gates[g];
            err << "  gate " << g << ": " << gate_name(gate.kind) << " control=" << gate.control()
                << " target=" << gate.target() << "\n";
        }
        return kExitValidation;
    }
    CutOptions options{std::max<size_t>(1, a.threads), a.reference == "uncut", true};
    StitchedResult result = execute_cut(circuit, plan, options);
    emit(a.table ? format_probability_table(result.probabilities) : stitched_result_to_json(result), a.out, out);
    return kExitOk;
}

struct SimulateArgs {
    std::string circuit;
    std::string out;
    bool table = false;
};

int do_simulate(const SimulateArgs &a, std::ostream &out) {
    Circuit circuit = load_circuit(a.circuit);
    StateVector state = run(circuit);
    Reconstruction r = reconstruct_probabilities(state, MixedRadixSpec::identity(circuit.dims));
    emit(a.table ? format_probability_table(r.probabilities) : simulation_to_json(r), a.out, out);
    return kExitOk;
}

struct BenchArgs {
    std::string circuit;
    std::vector<size_t> dims;
    std::optional<size_t> cut;
    size_t boundary = 0;
    uint64_t bytes = kComplex64Bytes;
    std::optional<uint64_t> terms;
    std::string method = "gellmann";
    std::vector<double> thresholds{0.0};
    size_t reps = 12;
    size_t threads = 1;
    std::string csv;
    std::string svg;
};

Circuit bench_circuit(const BenchArgs &a) {
    if (!a.circuit.empty()) {
        return load_circuit(a.circuit);
    }
    if (a.dims.empty()) {
        throw std::invalid_argument("provide --circuit or --dims");
    }
    for (size_t d : a.dims) {
        require_dimension(d);
    }
    return reference_circuit(a.dims);
}

size_t bench_boundary(const BenchArgs &a, const Circuit &c) {
    return a.boundary ? a.boundary : c.dims.size() / 2;
}

int do_bench_memory(const BenchArgs &a, std::ostream &out) {
    if (a.dims.empty()) {
        throw std::invalid_argument("--dims is required");
    }
    if (a.bytes == 0) {
        throw std::invalid_argument("--bytes must be positive");
    }
    MemoryEstimate est = estimate_memory(a.dims, a.cut, a.bytes);
    out << "full: " << est.full_bytes << " B; fragments: " << est.fragment_bytes << " B\n";
    if (a.terms) {
        out << "working set (" << *a.terms << " terms): " << est.working_set_bytes(*a.terms) << " B\n";
    }
    return kExitOk;
}

int do_bench_sweep(const BenchArgs &a, std::ostream &out) {
    Circuit c = bench_circuit(a);
    auto records = truncation_sweep(c, bench_boundary(a, c), parse_method(a.method), a.thresholds,
                                    std::max<size_t>(1, a.threads));
    std::ostringstream csv;
    write_sweep_csv(csv, records);
    emit(csv.str(), a.csv, out);
    if (!a.svg.empty()) {
        PlotSeries tvd_series{"TVD", {}};
        PlotSeries term_series{"terms / max terms", {}};
        double max_terms = 1;
        for (const auto &r : records) {
            max_terms = std::max(max_terms, static_cast<double>(r.term_count));
        }
        for (const auto &r : records) {
            tvd_series.points.emplace_back(r.threshold, r.tvd);
            term_series.points.emplace_back(r.threshold, static_cast<double>(r.term_count) / max_terms);
        }
        std::vector<PlotSeries> series{tvd_series, term_series};
        std::ostringstream svg;
        write_svg_plot(svg, "Truncation sweep " + dims_string(c.dims), "threshold", "value", series);
        write_text_file(output_path(a.svg), svg.str());
    }
    return kExitOk;
}

int do_bench_speedup(const BenchArgs &a, std::ostream &out) {
    Circuit c = bench_circuit(a);
    SpeedupReport report = speedup_report(c, bench_boundary(a, c), a.reps, std::max<size_t>(1, a.threads));
    std::ostringstream csv;
    write_speedup_csv(csv, report);
    emit(csv.str(), a.csv, out);
    if (!a.csv.empty()) {
        out << "pairs: " << report.pair_count << "; speedup M = " << report.speedup << "\n";
    }
    if (!a.svg.empty()) {
        PlotSeries uncut{"uncut", {}};
        PlotSeries cut{"cut (schmidt)", {}};
        for (size_t i = 0; i < report.uncut_s.size(); i++) {
            uncut.points.emplace_back(static_cast<double>(i), report.uncut_s[i]);
            cut.points.emplace_back(static_cast<double>(i), report.cut_s[i]);
        }
        std::vector<PlotSeries> series{uncut, cut};
        std::ostringstream svg;
        write_svg_plot(svg, "Run time per repetition " + dims_string(c.dims), "repetition", "seconds", series);
        write_text_file(output_path(a.svg), svg.str());
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mixed-dimensional qudit simulator and gate-cutting engine", "qcut"};
    app.require_subcommand(1);

    DecomposeArgs dargs;
    auto *dec = app.add_subcommand("decompose", "Decompose a two-qudit gate into local terms");
    dec->add_option("--gate", dargs.gate, "csum or file")->capture_default_str();
    dec->add_option("--input", dargs.input, "JSON file with a \"matrix\" field (for --gate file)");
    dec->add_option("--d1", dargs.d1, "control / first dimension")->capture_default_str();
    dec->add_option("--d2", dargs.d2, "target / second dimension")->capture_default_str();
    dec->add_option("--method", dargs.method, "gellmann or schmidt")->capture_default_str();
    dec->add_option("--threshold", dargs.threshold, "truncation threshold")->capture_default_str();
    dec->add_option("--out", dargs.out, "write the recipe JSON here");

    CutArgs cargs;
    auto *cut = app.add_subcommand("cut", "Cut a circuit at a register boundary and stitch the fragments");
    cut->add_option("--circuit", cargs.circuit, "circuit JSON file")->required();
    cut->add_option("--boundary", cargs.boundary, "qudits [0,k) form the upper fragment")->required();
    cut->add_option("--method", cargs.method, "gellmann or schmidt")->capture_default_str();
    cut->add_option("--threshold", cargs.threshold, "truncation threshold")->capture_default_str();
    cut->add_option("--reference", cargs.reference, "uncut or none")->capture_default_str();
    cut->add_option("--out", cargs.out, "write the result here instead of stdout");
    cut->add_option("--threads", cargs.threads, "fragment worker threads")->capture_default_str();
    cut->add_flag("--table", cargs.table, "print '<state> <p>' lines instead of JSON");

    SimulateArgs sargs;
    auto *sim = app.add_subcommand("simulate", "Simulate a circuit without cutting");
    sim->add_option("--circuit", sargs.circuit, "circuit JSON file")->required();
    sim->add_option("--out", sargs.out, "write the result here instead of stdout");
    sim->add_flag("--table", sargs.table, "print '<state> <p>' lines instead of JSON");

    BenchArgs bargs;
    auto *bench = app.add_subcommand("bench", "Memory accounting, truncation sweeps and timing");
    bench->require_subcommand(1);
    auto add_circuit_flags = [&](CLI::App *sub) {
        sub->add_option("--circuit", bargs.circuit, "circuit JSON file");
        sub->add_option("--dims", bargs.dims, "dims for the built-in reference circuit")->delimiter(',');
        sub->add_option("--boundary", bargs.boundary, "cut boundary (default n/2)");
        sub->add_option("--threads", bargs.threads, "fragment worker threads")->capture_default_str();
        sub->add_option("--csv", bargs.csv, "CSV output path (default stdout)");
        sub->add_option("--svg", bargs.svg, "SVG plot output path");
    };
    auto *memory = bench->add_subcommand("memory", "Statevector memory accounting");
    memory->add_option("--dims", bargs.dims, "comma-separated dims")->delimiter(',')->required();
    memory->add_option("--cut", bargs.cut, "cut boundary");
    memory->add_option("--bytes", bargs.bytes, "bytes per amplitude")->capture_default_str();
    memory->add_option("--terms", bargs.terms, "also report the working set for this many terms");
    auto *sweep = bench->add_subcommand("sweep", "Truncation threshold sweep");
    add_circuit_flags(sweep);
    sweep->add_option("--method", bargs.method, "gellmann or schmidt")->capture_default_str();
    sweep->add_option("--thresholds", bargs.thresholds, "comma-separated thresholds")->delimiter(',');
    auto *speed = bench->add_subcommand("speedup", "Uncut vs. Schmidt-cut timing");
    add_circuit_flags(speed);
    speed->add_option("--reps", bargs.reps, "repetitions")->capture_default_str();

    std::vector<const char *> argv;
    for (const auto &s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*dec) {
            return do_decompose(dargs, out);
        }
        if (*cut) {
            return do_cut(cargs, out, err);
        }
        if (*sim) {
            return do_simulate(sargs, out);
        }
        if (*memory) {
            return do_bench_memory(bargs, out);
        }
        if (*sweep) {
            return do_bench_sweep(bargs, out);
        }
        if (*speed) {
            return do_bench_speedup(bargs, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace qcut::cli
