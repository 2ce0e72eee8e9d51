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

#include "qcut/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

using namespace qcut;
using json = nlohmann::ordered_json;

namespace {

json matrix_to_json(const DenseOperator &m) {
    json arr = json::array();
    for (const auto &e : m.entries()) {
        arr.push_back({e.real(), e.imag()});
    }
    return arr;
}

DenseOperator matrix_from_json(const json &arr, const std::string &where) {
    if (!arr.is_array()) {
        throw std::invalid_argument(where + ": matrix must be an array of [re, im] pairs");
    }
    size_t n = arr.size();
    size_t dim = 0;
    while (dim * dim < n) {
        dim++;
    }
    if (n == 0 || dim * dim != n) {
        throw std::invalid_argument(where + ": matrix has " + std::to_string(n) + " entries, not a square count");
    }
    std::vector<cplx> entries;
    entries.reserve(n);
    for (const auto &e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw std::invalid_argument(where + ": matrix entries must be [re, im] number pairs");
        }
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return DenseOperator(dim, std::move(entries));
}

size_t index_field(const json &g, const char *key, const std::string &where) {
    if (!g.contains(key)) {
        throw std::invalid_argument(where + ": missing \"" + key + "\"");
    }
    const json &v = g[key];
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument(where + ": \"" + key + "\" must be a non-negative integer");
    }
    return v.get<size_t>();
}

json probabilities_json(const ProbabilityMap &p) {
    json obj = json::object();
    for (const auto &[k, v] : p) {
        obj[k] = v;
    }
    return obj;
}

}  // namespace

Circuit qcut::parse_circuit_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc["dims"].is_array()) {
        throw std::invalid_argument("circuit file: expected an object with a \"dims\" array");
    }
    Circuit c;
    for (const auto &d : doc["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 2) {
            throw std::invalid_argument("circuit file: dims must be integers >= 2");
        }
        c.dims.push_back(d.get<size_t>());
    }
    if (doc.contains("gates")) {
        if (!doc["gates"].is_array()) {
            throw std::invalid_argument("circuit file: \"gates\" must be an array");
        }
        for (size_t i = 0; i < doc["gates"].size(); i++) {
            const json &g = doc["gates"][i];
            std::string where = "gate " + std::to_string(i);
            if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) {
                throw std::invalid_argument(where + ": expected an object with a string \"name\"");
            }
            GateSpec spec;
            spec.kind = parse_gate_name(g["name"].get<std::string>());
            if (spec.is_two_qudit()) {
                spec.targets = {index_field(g, "control", where), index_field(g, "target", where)};
            } else {
                spec.targets = {index_field(g, "target", where)};
            }
            if (spec.kind == GateKind::RY || spec.kind == GateKind::RZ) {
                if (!g.contains("theta") || !g["theta"].is_number()) {
                    throw std::invalid_argument(where + ": RY/RZ need a numeric \"theta\"");
                }
                spec.theta = g["theta"].get<double>();
            }
            if (spec.kind == GateKind::UNITARY2 || spec.kind == GateKind::OP) {
                if (!g.contains("matrix")) {
                    throw std::invalid_argument(where + ": missing \"matrix\"");
                }
                spec.matrix = matrix_from_json(g["matrix"], where);
            }
            c.gates.push_back(std::move(spec));
        }
    }
    validate_circuit(c);
    return c;
}

std::string qcut::circuit_to_json(const Circuit &circuit) {
    json doc;
    doc["dims"] = circuit.dims;
    json gates = json::array();
    for (const auto &g : circuit.gates) {
        json e;
        e["name"] = std::string(gate_name(g.kind));
        if (g.is_two_qudit()) {
            e["control"] = g.control();
        }
        e["target"] = g.target();
        if (g.kind == GateKind::RY || g.kind == GateKind::RZ) {
            e["theta"] = g.theta;
        }
        if (g.matrix) {
            e["matrix"] = matrix_to_json(*g.matrix);
        }
        gates.push_back(std::move(e));
    }
    doc["gates"] = std::move(gates);
    return doc.dump(2) + "\n";
}

std::string qcut::read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void qcut::write_text_file(const std::filesystem::path &path, std::string_view text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

Circuit qcut::load_circuit(const std::filesystem::path &path) {
    try {
        return parse_circuit_json(read_text_file(path));
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void qcut::save_circuit(const std::filesystem::path &path, const Circuit &circuit) {
    write_text_file(path, circuit_to_json(circuit));
}

std::string qcut::decomposition_to_json(const GateDecomposition &dec) {
    json doc;
    doc["method"] = std::string(method_name(dec.method));
    doc["d1"] = dec.d1;
    doc["d2"] = dec.d2;
    doc["threshold"] = dec.threshold;
    doc["residual"] = dec.residual;
    doc["term_count"] = dec.size();
    json terms = json::array();
    for (const auto &t : dec.terms) {
        json e;
        e["coeff"] = {t.coeff.real(), t.coeff.imag()};
        if (dec.method == DecompositionMethod::GellMann) {
            e["a"] = t.label_a;
            e["b"] = t.label_b;
        } else {
            e["sigma"] = t.weight;
            e["a"] = matrix_to_json(t.op_a);
            e["b"] = matrix_to_json(t.op_b);
        }
        terms.push_back(std::move(e));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

std::string qcut::stitched_result_to_json(const StitchedResult &result) {
    json doc;
    doc["pairs"] = result.pair_count;
    doc["raw_norm"] = result.raw_norm;
    doc["tvd_vs_uncut"] = result.tvd_vs_uncut ? json(*result.tvd_vs_uncut) : json(nullptr);
    doc["probabilities"] = probabilities_json(result.probabilities);
    return doc.dump(2) + "\n";
}

std::string qcut::simulation_to_json(const Reconstruction &reconstruction) {
    json doc;
    doc["norm"] = reconstruction.raw_norm;
    doc["probabilities"] = probabilities_json(reconstruction.probabilities);
    return doc.dump(2) + "\n";
}

std::string qcut::format_probability_table(const ProbabilityMap &probabilities) {
    std::string out;
    char buf[64];
    for (const auto &[state, p] : probabilities) {
        std::snprintf(buf, sizeof(buf), "%.5f", p);
        out += state;
        out += ' ';
        out += buf;
        out += '\n';
    }
    return out;
}
