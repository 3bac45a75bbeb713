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

#ifndef QNC_LIGHTCONE_HPP_
#define QNC_LIGHTCONE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "qnc/circuit.hpp"

namespace qnc {

// Backward lightcone of a qubit: every qubit with a forward path to it.
struct Lightcone {
    Qubit qubit = 0;
    std::vector<Qubit> cone;  // sorted; always contains `qubit`
};

// Frontier sweep from the last layer to the first: a gate touching the
// frontier pulls all its operands in.
Lightcone backward_cone(const Circuit& c, Qubit q);

// Relevance sets per layer boundary for the reduced-density walk:
// result[l] is the set of qubits that can still reach q via layers l..d-1
// (0-based layers), so result[0] = D_q and result[d] = {q}. Sets are sorted
// and shrink monotonically.
std::vector<std::vector<Qubit>> suffix_cones(const std::vector<std::vector<Gate>>& layers,
                                             Qubit num_qubits, Qubit q);

// Intersection graph of output-qubit lightcones.
struct DependencyGraph {
    std::vector<Qubit> vertices;                // sorted output qubits
    std::vector<Lightcone> cones;               // aligned with vertices
    std::vector<std::vector<std::size_t>> adj;  // neighbor positions, sorted

    std::size_t max_degree() const;
    std::vector<std::pair<Qubit, Qubit>> edge_list() const;
    // D_S for a subset of vertices (by qubit index).
    std::vector<Qubit> cone_union(const std::vector<Qubit>& subset) const;
};

DependencyGraph dependency_graph(const Circuit& c);

// Proper coloring with colors 1..num_colors, vertices processed in ascending
// index order, each taking the least color unused by its colored neighbors.
// Uses at most max_degree + 1 colors.
struct Coloring {
    std::vector<std::uint32_t> colors;  // aligned with graph vertices, 1-based
    std::uint32_t num_colors = 0;
};

Coloring greedy_coloring(const DependencyGraph& g);

}  // namespace qnc

#endif  // QNC_LIGHTCONE_HPP_
