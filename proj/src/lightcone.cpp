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

#include "qnc/lightcone.hpp"

#include <algorithm>

#include "qnc/error.hpp"

namespace qnc {

namespace {

std::vector<Qubit> mask_to_sorted(const std::vector<char>& member) {
    std::vector<Qubit> out;
    for (std::size_t q = 0; q < member.size(); ++q)
        if (member[q]) out.push_back(static_cast<Qubit>(q));
    return out;
}

bool gate_touches(const Gate& g, const std::vector<char>& member) {
    for (Qubit q : g.operands)
        if (member[q]) return true;
    return false;
}

}  // namespace

std::vector<std::vector<Qubit>> suffix_cones(const std::vector<std::vector<Gate>>& layers,
                                             Qubit num_qubits, Qubit q) {
    if (q >= num_qubits) throw ValidationError("cone qubit out of range");
    std::vector<char> member(num_qubits, 0);
    member[q] = 1;
    std::vector<std::vector<Qubit>> sets(layers.size() + 1);
    sets[layers.size()] = {q};
    for (std::size_t l = layers.size(); l-- > 0;) {
        for (const Gate& g : layers[l]) {
            if (!gate_touches(g, member)) continue;
            for (Qubit p : g.operands) member[p] = 1;
        }
        sets[l] = mask_to_sorted(member);
    }
    return sets;
}

Lightcone backward_cone(const Circuit& c, Qubit q) {
    auto sets = suffix_cones(c.layers, c.num_qubits, q);
    return {q, std::move(sets.front())};
}

std::size_t DependencyGraph::max_degree() const {
    std::size_t deg = 0;
    for (const auto& nbrs : adj) deg = std::max(deg, nbrs.size());
    return deg;
}

std::vector<std::pair<Qubit, Qubit>> DependencyGraph::edge_list() const {
    std::vector<std::pair<Qubit, Qubit>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j : adj[i])
            if (i < j) edges.emplace_back(vertices[i], vertices[j]);
    return edges;
}

std::vector<Qubit> DependencyGraph::cone_union(const std::vector<Qubit>& subset) const {
    std::vector<Qubit> acc;
    for (Qubit q : subset) {
        const auto it = std::lower_bound(vertices.begin(), vertices.end(), q);
        if (it == vertices.end() || *it != q)
            throw ValidationError("cone_union: qubit " + std::to_string(q) + " is not a vertex");
        const auto& cone = cones[static_cast<std::size_t>(it - vertices.begin())].cone;
        std::vector<Qubit> merged;
        std::set_union(acc.begin(), acc.end(), cone.begin(), cone.end(),
                       std::back_inserter(merged));
        acc = std::move(merged);
    }
    return acc;
}

DependencyGraph dependency_graph(const Circuit& c) {
    DependencyGraph g;
    g.vertices = c.outputs;  // already sorted, distinct
    g.cones.reserve(g.vertices.size());
    for (Qubit q : g.vertices) g.cones.push_back(backward_cone(c, q));
    g.adj.assign(g.vertices.size(), {});
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const auto& a = g.cones[i].cone;
            const auto& b = g.cones[j].cone;
            std::vector<Qubit> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (!common.empty()) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    }
    return g;
}

Coloring greedy_coloring(const DependencyGraph& g) {
    Coloring col;
    col.colors.assign(g.vertices.size(), 0);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        std::vector<char> used(g.vertices.size() + 2, 0);
        for (std::size_t j : g.adj[i])
            if (j < i && col.colors[j] != 0) used[col.colors[j]] = 1;
        std::uint32_t c = 1;
        while (used[c]) ++c;
        col.colors[i] = c;
        col.num_colors = std::max(col.num_colors, c);
    }
    return col;
}

}  // namespace qnc
