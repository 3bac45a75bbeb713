// Copyright 2026 The qnc authors
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

#include "qnc/circuit.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "qnc/error.hpp"

namespace qnc {

std::size_t Circuit::gate_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.size();
    return n;
}

std::vector<Gate> flatten(const Circuit& c) {
    std::vector<Gate> gates;
    gates.reserve(c.gate_count());
    for (const auto& layer : c.layers)
        for (const auto& g : layer) gates.push_back(g);
    return gates;
}

std::vector<std::vector<Gate>> asap_layers(const std::vector<Gate>& gates, Qubit num_qubits) {
    std::vector<std::size_t> ready_at(num_qubits, 0);  // layer index each qubit becomes free in
    std::vector<std::vector<Gate>> layers;
    for (const Gate& g : gates) {
        std::size_t layer = 0;
        for (Qubit q : g.operands) layer = std::max(layer, ready_at.at(q));
        if (layer == layers.size()) layers.emplace_back();
        layers[layer].push_back(g);
        for (Qubit q : g.operands) ready_at[q] = layer + 1;
    }
    return layers;
}

namespace {

void check_gate(const Gate& g, Qubit num_qubits, std::vector<Violation>* out) {
    if (g.operands.size() != g.kind.width()) {
        out->push_back({Violation::Kind::BadArity,
                        g.kind.name() + " expects " + std::to_string(g.kind.width()) +
                            " operands, got " + std::to_string(g.operands.size())});
        return;
    }
    std::set<Qubit> seen;
    for (Qubit q : g.operands) {
        if (q >= num_qubits)
            out->push_back({Violation::Kind::IndexOutOfRange,
                            "qubit " + std::to_string(q) + " out of range (circuit has " +
                                std::to_string(num_qubits) + " qubits)"});
        if (!seen.insert(q).second)
            out->push_back({Violation::Kind::DuplicateOperand,
                            "duplicate operand " + std::to_string(q) + " in " + gate_to_string(g)});
    }
}

void check_io_set(const std::vector<Qubit>& qs, Qubit num_qubits, const char* what,
                  std::vector<Violation>* out) {
    std::set<Qubit> seen;
    for (Qubit q : qs) {
        if (q >= num_qubits)
            out->push_back({Violation::Kind::BadIoSet,
                            std::string(what) + " qubit " + std::to_string(q) + " out of range"});
        if (!seen.insert(q).second)
            out->push_back({Violation::Kind::BadIoSet,
                            std::string(what) + " qubit " + std::to_string(q) + " listed twice"});
    }
    if (!std::is_sorted(qs.begin(), qs.end()))
        out->push_back({Violation::Kind::BadIoSet, std::string(what) + " set not sorted"});
}

std::vector<Qubit> sorted_unique(std::vector<Qubit> qs) {
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

}  // namespace

std::vector<Violation> validate(const Circuit& c) {
    std::vector<Violation> out;
    if (c.num_qubits == 0)
        out.push_back({Violation::Kind::BadQubitCount, "circuit must have at least one qubit"});
    check_io_set(c.inputs, c.num_qubits, "input", &out);
    check_io_set(c.outputs, c.num_qubits, "output", &out);
    for (const auto& layer : c.layers) {
        std::set<Qubit> used;
        for (const Gate& g : layer) {
            check_gate(g, c.num_qubits, &out);
            for (Qubit q : g.operands) {
                if (!used.insert(q).second)
                    out.push_back({Violation::Kind::LayerOverlap,
                                   "layer overlap on qubit " + std::to_string(q)});
            }
        }
    }
    return out;
}

void validate_or_throw(const Circuit& c) {
    auto violations = validate(c);
    if (!violations.empty()) throw ValidationError(violations.front().message);
}

Circuit layerize(std::vector<Gate> gates, Qubit num_qubits, std::vector<Qubit> inputs,
                 std::vector<Qubit> outputs) {
    Circuit c;
    c.num_qubits = num_qubits;
    c.inputs = sorted_unique(std::move(inputs));
    c.outputs = sorted_unique(std::move(outputs));
    // Validate gates before scheduling; ready_at indexing needs in-range operands.
    {
        std::vector<Violation> out;
        for (const Gate& g : gates) check_gate(g, num_qubits, &out);
        check_io_set(c.inputs, num_qubits, "input", &out);
        check_io_set(c.outputs, num_qubits, "output", &out);
        if (num_qubits == 0) out.push_back({Violation::Kind::BadQubitCount, "zero qubits"});
        if (!out.empty()) throw ValidationError(out.front().message);
    }
    c.layers = asap_layers(gates, num_qubits);
    return c;
}

Circuit make_layered(std::vector<std::vector<Gate>> layers, Qubit num_qubits,
                     std::vector<Qubit> inputs, std::vector<Qubit> outputs) {
    Circuit c;
    c.num_qubits = num_qubits;
    c.inputs = sorted_unique(std::move(inputs));
    c.outputs = sorted_unique(std::move(outputs));
    c.layers = std::move(layers);
    validate_or_throw(c);
    return c;
}

std::size_t depth(const Circuit& c) {
    return asap_layers(flatten(c), c.num_qubits).size();
}

std::size_t size(const Circuit& c) {
    std::size_t s = c.outputs.size();
    for (const auto& layer : c.layers)
        for (const Gate& g : layer) s += g.operands.size();
    return s;
}

namespace {

// Sort gates within a layer by lowest operand; disjointness makes this total.
std::vector<std::vector<Gate>> canonical_sorted_layers(const Circuit& c) {
    auto layers = asap_layers(flatten(c), c.num_qubits);
    for (auto& layer : layers) {
        std::sort(layer.begin(), layer.end(), [](const Gate& a, const Gate& b) {
            return *std::min_element(a.operands.begin(), a.operands.end()) <
                   *std::min_element(b.operands.begin(), b.operands.end());
        });
    }
    return layers;
}

}  // namespace

bool structurally_equal(const Circuit& a, const Circuit& b) {
    return a.num_qubits == b.num_qubits && a.inputs == b.inputs && a.outputs == b.outputs &&
           canonical_sorted_layers(a) == canonical_sorted_layers(b);
}

}  // namespace qnc
