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

#include "qcut/cutting.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "qcut/schmidt.h"

using namespace qcut;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string join_indices(const std::vector<size_t> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) {
            s += ", ";
        }
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::vector<size_t> qcut::crossing_gates(const Circuit &circuit, size_t boundary) {
    std::vector<size_t> out;
    for (size_t i = 0; i < circuit.gates.size(); i++) {
        const auto &g = circuit.gates[i];
        if (g.is_two_qudit() && ((g.control() < boundary) != (g.target() < boundary))) {
            out.push_back(i);
        }
    }
    return out;
}

CutPlan qcut::plan_cut(const Circuit &circuit, size_t boundary, DecompositionMethod method, double threshold) {
    validate_circuit(circuit);
    if (threshold < 0 || std::isnan(threshold)) {
        throw std::invalid_argument("cut threshold must be >= 0");
    }
    size_t n = circuit.dims.size();
    if (boundary == 0 || boundary >= n) {
        throw CutPlanError(
            "boundary " + std::to_string(boundary) + " leaves an empty fragment (valid boundaries are 1.." +
                std::to_string(n - 1) + ")",
            {});
    }
    std::vector<size_t> crossing = crossing_gates(circuit, boundary);
    if (crossing.empty()) {
        throw CutPlanError("no gate crosses boundary " + std::to_string(boundary), {});
    }
    if (crossing.size() > 1) {
        throw CutPlanError(
            std::to_string(crossing.size()) + " gates cross boundary " + std::to_string(boundary) +
                " (gates " + join_indices(crossing) + "); only a single cut gate is supported",
            crossing);
    }
    const auto &gate = circuit.gates[crossing[0]];
    if (method == DecompositionMethod::GellMann && gate.kind != GateKind::CSUM) {
        throw std::invalid_argument(
            "gellmann method only decomposes CSUM gates; gate " + std::to_string(crossing[0]) + " is " +
            std::string(gate_name(gate.kind)) + " (use schmidt)");
    }
    return CutPlan{boundary, crossing[0], method, threshold};
}

GateDecomposition qcut::decompose_crossing_gate(const Circuit &circuit, const CutPlan &plan) {
    const auto &gate = circuit.gates.at(plan.crossing_gate);
    size_t d1 = circuit.dims[gate.control()];
    size_t d2 = circuit.dims[gate.target()];
    if (plan.method == DecompositionMethod::GellMann) {
        if (gate.kind != GateKind::CSUM) {
            throw std::invalid_argument("gellmann method only decomposes CSUM gates");
        }
        return decompose_csum(d1, d2, plan.threshold);
    }
    return decompose_schmidt(gate_operator(gate, circuit.dims), d1, d2, plan.threshold);
}

std::vector<FragmentPair> qcut::generate_fragments(const Circuit &circuit, const CutPlan &plan) {
    return generate_fragments(circuit, plan, decompose_crossing_gate(circuit, plan));
}

std::vector<FragmentPair> qcut::generate_fragments(
    const Circuit &circuit, const CutPlan &plan, const GateDecomposition &decomposition) {
    size_t k = plan.boundary;
    const auto &crossing = circuit.gates.at(plan.crossing_gate);
    bool control_upper = crossing.control() < k;

    Circuit upper_base{std::vector<size_t>(circuit.dims.begin(), circuit.dims.begin() + k), {}};
    Circuit lower_base{std::vector<size_t>(circuit.dims.begin() + k, circuit.dims.end()), {}};
    // Gates before and after the crossing gate, already routed.
    std::vector<GateSpec> upper_pre, upper_post, lower_pre, lower_post;
    for (size_t i = 0; i < circuit.gates.size(); i++) {
        if (i == plan.crossing_gate) {
            continue;
        }
        GateSpec g = circuit.gates[i];
        bool in_upper = g.targets[0] < k;
        if (!in_upper) {
            for (auto &q : g.targets) {
                q -= k;
            }
        }
        bool before = i < plan.crossing_gate;
        auto &dest = in_upper ? (before ? upper_pre : upper_post) : (before ? lower_pre : lower_post);
        dest.push_back(std::move(g));
    }

    size_t control_wire = control_upper ? crossing.control() : crossing.control() - k;
    size_t target_wire = control_upper ? crossing.target() - k : crossing.target();

    std::vector<FragmentPair> pairs;
    pairs.reserve(decomposition.terms.size());
    for (const auto &term : decomposition.terms) {
        GateSpec on_control = GateSpec::op(control_wire, term.op_a);
        GateSpec on_target = GateSpec::op(target_wire, term.op_b);
        FragmentPair pair{term.coeff, upper_base, lower_base, 0, 0};
        pair.upper.gates = upper_pre;
        pair.upper.gates.push_back(control_upper ? std::move(on_control) : std::move(on_target));
        pair.upper.gates.insert(pair.upper.gates.end(), upper_post.begin(), upper_post.end());
        pair.lower.gates = lower_pre;
        pair.lower.gates.push_back(control_upper ? std::move(on_target) : std::move(on_control));
        pair.lower.gates.insert(pair.lower.gates.end(), lower_post.begin(), lower_post.end());
        pair.upper_key = control_upper ? term.index_a : term.index_b;
        pair.lower_key = control_upper ? term.index_b : term.index_a;
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

FragmentOutputs qcut::execute_fragments(std::span<const FragmentPair> pairs, size_t threads) {
    FragmentOutputs out;
    std::map<size_t, size_t> upper_slots;
    std::map<size_t, size_t> lower_slots;
    std::vector<const Circuit *> upper_jobs;
    std::vector<const Circuit *> lower_jobs;
    for (const auto &p : pairs) {
        auto [u, u_new] = upper_slots.try_emplace(p.upper_key, upper_jobs.size());
        if (u_new) {
            upper_jobs.push_back(&p.upper);
        }
        auto [l, l_new] = lower_slots.try_emplace(p.lower_key, lower_jobs.size());
        if (l_new) {
            lower_jobs.push_back(&p.lower);
        }
        out.upper_slot.push_back(u->second);
        out.lower_slot.push_back(l->second);
    }

    std::vector<const Circuit *> jobs = upper_jobs;
    jobs.insert(jobs.end(), lower_jobs.begin(), lower_jobs.end());
    std::vector<std::optional<StateVector>> results(jobs.size());
    auto worker = [&](size_t first, size_t step) {
        for (size_t j = first; j < jobs.size(); j += step) {
            results[j] = run(*jobs[j]);
        }
    };
    threads = std::max<size_t>(1, std::min(threads, jobs.size()));
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back([&, t] {
                try {
                    worker(t, threads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        pool.clear();
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    for (size_t j = 0; j < jobs.size(); j++) {
        (j < upper_jobs.size() ? out.upper : out.lower).push_back(std::move(*results[j]));
    }
    return out;
}

StateVector qcut::combine_fragments(std::span<const FragmentPair> pairs, const FragmentOutputs &outputs) {
    if (pairs.empty()) {
        throw std::invalid_argument("stitch: no fragment pairs (every term was truncated)");
    }
    if (outputs.upper_slot.size() != pairs.size() || outputs.lower_slot.size() != pairs.size()) {
        throw std::invalid_argument("stitch: fragment outputs do not match pairs");
    }
    const StateVector &u0 = outputs.upper.at(outputs.upper_slot[0]);
    const StateVector &l0 = outputs.lower.at(outputs.lower_slot[0]);
    std::vector<size_t> dims = u0.dims();
    dims.insert(dims.end(), l0.dims().begin(), l0.dims().end());
    StateVector result = StateVector::zeros(dims);
    auto res = result.mutable_amps();
    size_t n_lower = l0.size();

    for (size_t slot = 0; slot < outputs.upper.size(); slot++) {
        std::vector<cplx> lower_sum(n_lower);
        bool any = false;
        for (size_t i = 0; i < pairs.size(); i++) {
            if (outputs.upper_slot[i] != slot) {
                continue;
            }
            any = true;
            const StateVector &l = outputs.lower[outputs.lower_slot[i]];
            cplx c = pairs[i].coeff;
            for (size_t j = 0; j < n_lower; j++) {
                lower_sum[j] += c * l[j];
            }
        }
        if (!any) {
            continue;
        }
        const StateVector &u = outputs.upper[slot];
        for (size_t a = 0; a < u.size(); a++) {
            cplx v = u[a];
            if (v == cplx{}) {
                continue;
            }
            cplx *row = res.data() + a * n_lower;
            for (size_t j = 0; j < n_lower; j++) {
                row[j] += v * lower_sum[j];
            }
        }
    }
    return result;
}

StateVector qcut::stitch(std::span<const FragmentPair> pairs, size_t threads) {
    if (pairs.empty()) {
        throw std::invalid_argument("stitch: no fragment pairs (every term was truncated)");
    }
    return combine_fragments(pairs, execute_fragments(pairs, threads));
}

std::string qcut::state_label(std::span<const size_t> digits, std::span<const size_t> bases) {
    bool wide = std::any_of(bases.begin(), bases.end(), [](size_t b) {
        return b >= 11;
    });
    std::string s;
    for (size_t j = 0; j < digits.size(); j++) {
        if (wide && j) {
            s += ',';
        }
        s += std::to_string(digits[j]);
    }
    return s;
}

Reconstruction qcut::reconstruct_probabilities(const StateVector &amps, const MixedRadixSpec &spec) {
    if (amps.size() != spec.total()) {
        throw std::invalid_argument(
            "reconstruct_probabilities: " + std::to_string(amps.size()) + " amplitudes but bases span " +
            std::to_string(spec.total()));
    }
    Reconstruction out;
    out.raw_norm = amps.norm_squared();
    if (!(out.raw_norm > 0)) {
        throw std::invalid_argument("reconstruct_probabilities: amplitudes are all zero");
    }
    std::vector<size_t> logical = spec.logical_bases();
    for (size_t k = 0; k < amps.size(); k++) {
        std::vector<size_t> digits = mixed_radix_decode(k, spec);
        std::vector<size_t> ordered = permute_digits(digits, spec);
        out.probabilities[state_label(ordered, logical)] = std::norm(amps[k]) / out.raw_norm;
    }
    return out;
}

double qcut::tvd(const ProbabilityMap &p, const ProbabilityMap &q) {
    double s = 0;
    for (const auto &[key, pv] : p) {
        auto it = q.find(key);
        s += std::abs(pv - (it == q.end() ? 0.0 : it->second));
    }
    for (const auto &[key, qv] : q) {
        if (!p.contains(key)) {
            s += std::abs(qv);
        }
    }
    return s / 2;
}

double qcut::tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("tvd: distributions have different sizes");
    }
    double s = 0;
    for (size_t i = 0; i < p.size(); i++) {
        s += std::abs(p[i] - q[i]);
    }
    return s / 2;
}

StitchedResult qcut::execute_cut(const Circuit &circuit, const CutPlan &plan, const CutOptions &options) {
    auto t0 = std::chrono::steady_clock::now();
    GateDecomposition dec = decompose_crossing_gate(circuit, plan);
    double decompose_s = seconds_since(t0);
    StitchedResult r = execute_cut(circuit, plan, dec, options);
    r.timings.decompose_s = decompose_s;
    return r;
}

StitchedResult qcut::execute_cut(
    const Circuit &circuit, const CutPlan &plan, const GateDecomposition &decomposition, const CutOptions &options,
    const std::optional<StateVector> &uncut) {
    CutTimings timings;
    std::vector<FragmentPair> pairs = generate_fragments(circuit, plan, decomposition);
    if (pairs.empty()) {
        throw std::invalid_argument(
            "threshold " + std::to_string(decomposition.threshold) + " removed every decomposition term");
    }

    auto t0 = std::chrono::steady_clock::now();
    FragmentOutputs outputs = execute_fragments(pairs, options.threads);
    timings.simulate_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    StateVector amps = combine_fragments(pairs, outputs);
    timings.stitch_s = seconds_since(t0);

    StitchedResult r{std::move(amps), 0, {}, {}, pairs.size(), outputs.upper.size() + outputs.lower.size(),
                     decomposition.residual, std::nullopt, std::nullopt, timings};
    r.raw_norm = r.amplitudes.norm_squared();
    if (!(r.raw_norm > 0)) {
        throw std::invalid_argument("stitched amplitudes are all zero");
    }
    r.probability_vector = probabilities(r.amplitudes);
    for (auto &p : r.probability_vector) {
        p /= r.raw_norm;
    }
    if (options.build_probability_map) {
        r.probabilities = reconstruct_probabilities(r.amplitudes, MixedRadixSpec::identity(circuit.dims)).probabilities;
    }

    if (options.reference || uncut) {
        std::optional<StateVector> local;
        const StateVector *reference = uncut ? &*uncut : nullptr;
        if (!reference) {
            t0 = std::chrono::steady_clock::now();
            local = run(circuit);
            r.timings.uncut_s = seconds_since(t0);
            reference = &*local;
        }
        std::vector<double> ref_probs = probabilities(*reference);
        double ref_norm = reference->norm_squared();
        for (auto &p : ref_probs) {
            p /= ref_norm;
        }
        r.tvd_vs_uncut = tvd(r.probability_vector, ref_probs);
        r.max_amplitude_deviation = max_abs_diff(r.amplitudes, *reference);
    }
    return r;
}
