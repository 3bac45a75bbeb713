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

#ifndef QNC_CIRCUIT_HPP_
#define QNC_CIRCUIT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qnc/gates.hpp"

namespace qnc {

// A layered circuit over indexed qubits. Gates within a layer act on pairwise
// disjoint qubit sets. Non-input qubits are ancillae starting in |0>. The
// stored layering is whatever the producer declared; metrics (depth) always
// re-layerize canonically. Circuits are immutable after construction by
// convention and safe to share across threads read-only.
struct Circuit {
    Qubit num_qubits = 0;
    std::vector<Qubit> inputs;   // sorted, distinct
    std::vector<Qubit> outputs;  // sorted, distinct
    std::vector<std::vector<Gate>> layers;

    std::size_t gate_count() const;
    friend bool operator==(const Circuit& a, const Circuit& b) = default;
};

// Flat program-order gate list (layers concatenated).
std::vector<Gate> flatten(const Circuit& c);

// ASAP scheduling over the qubit-sharing precedence DAG: each gate lands in
// layer 1 + max(layer of any earlier gate sharing a qubit). This attains the
// minimum layer count over all order-preserving partitions, so the result is
// the canonical layering and its length is the depth metric.
std::vector<std::vector<Gate>> asap_layers(const std::vector<Gate>& gates, Qubit num_qubits);

// Build a circuit from a flat gate list (validates, then ASAP-layerizes).
Circuit layerize(std::vector<Gate> gates, Qubit num_qubits, std::vector<Qubit> inputs,
                 std::vector<Qubit> outputs);

// Build a circuit from declared layers (validates, keeps the declared layering).
Circuit make_layered(std::vector<std::vector<Gate>> layers, Qubit num_qubits,
                     std::vector<Qubit> inputs, std::vector<Qubit> outputs);

// Number of canonical layers. Invariant under re-layerization of the input.
std::size_t depth(const Circuit& c);

// Contact-point size: |outputs| + total operand count over all gates.
std::size_t size(const Circuit& c);

struct Violation {
    enum class Kind {
        BadQubitCount,
        IndexOutOfRange,
        DuplicateOperand,
        BadArity,
        LayerOverlap,
        BadIoSet,
    };
    Kind kind;
    std::string message;
};

// Checks every Circuit/Gate invariant; returns all violations found (empty = ok).
std::vector<Violation> validate(const Circuit& c);

// Throws ValidationError on the first violation.
void validate_or_throw(const Circuit& c);

// Equality of the IR modulo declared layering: same qubit count, same I/O
// sets, identical canonical layer structure.
bool structurally_equal(const Circuit& a, const Circuit& b);

}  // namespace qnc

#endif  // QNC_CIRCUIT_HPP_
