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

#include "qnc/teleport.hpp"

#include <algorithm>
#include <cmath>

#include "qnc/error.hpp"

namespace qnc {

CompressionResult compress_to_depth3(const Circuit& c) {
    validate_or_throw(c);
    CompressionResult res;

    std::vector<Qubit> segment(c.num_qubits);      // current physical wire per logical qubit
    std::vector<std::size_t> gates_seen(c.num_qubits, 0);
    res.segments.resize(c.num_qubits);
    for (Qubit q = 0; q < c.num_qubits; ++q) {
        segment[q] = q;
        res.segments[q] = {q};
    }

    Qubit next_fresh = c.num_qubits;
    std::vector<Gate> layer_b, layer_mid, layer_bdg;
    for (const Gate& g : flatten(c)) {
        Gate remapped = g;
        for (std::size_t i = 0; i < g.operands.size(); ++i) {
            const Qubit q = g.operands[i];
            if (gates_seen[q] > 0) {
                // Consecutive gates on q: teleport the segment through a fresh EPR pair.
                const Qubit e1 = next_fresh++;
                const Qubit e2 = next_fresh++;
                layer_b.push_back({GateKind::b(), {e1, e2}});
                layer_bdg.push_back({GateKind::bdg(), {segment[q], e1}});
                res.modules.push_back({q, segment[q], e1, e2});
                segment[q] = e2;
                res.segments[q].push_back(e2);
            }
            remapped.operands[i] = segment[q];
            ++gates_seen[q];
        }
        layer_mid.push_back(std::move(remapped));
    }

    res.k = res.modules.size();
    res.m = 2 * res.k;

    std::vector<Qubit> outputs;
    for (Qubit q : c.outputs) {
        res.output_map.emplace_back(q, segment[q]);
        outputs.push_back(segment[q]);
    }
    for (const auto& mod : res.modules) {
        outputs.push_back(mod.r1);
        outputs.push_back(mod.r2);
    }

    std::vector<std::vector<Gate>> layers;
    if (!layer_b.empty()) layers.push_back(std::move(layer_b));
    if (!layer_mid.empty()) layers.push_back(std::move(layer_mid));
    if (!layer_bdg.empty()) layers.push_back(std::move(layer_bdg));
    res.cprime = make_layered(std::move(layers), next_fresh, c.inputs, std::move(outputs));
    return res;
}

CompressionCheck verify_compression(const Circuit& c, const std::vector<bool>& x,
                                    const SimLimits& limits) {
    const CompressionResult comp = compress_to_depth3(c);
    CompressionCheck check;
    check.k = comp.k;
    check.m = comp.m;

    check.pr_c = acceptance_probability<FloatBackend>(c, x, limits);
    check.expected = std::ldexp(check.pr_c, -2 * static_cast<int>(comp.k));

    const auto state = run_statevector<FloatBackend>(comp.cprime, x, limits);
    const auto& outs = comp.cprime.outputs;
    check.pr_cprime = probability_of_outcome<FloatBackend>(
        state, outs, std::vector<bool>(outs.size(), false));
    check.abs_error = std::abs(check.pr_cprime - check.expected);

    std::vector<Qubit> all_pairs;
    for (const auto& mod : comp.modules) {
        check.pair_marginals.push_back(probability_of_outcome<FloatBackend>(
            state, {mod.r1, mod.r2}, {false, false}));
        all_pairs.push_back(mod.r1);
        all_pairs.push_back(mod.r2);
    }
    check.joint_pairs = probability_of_outcome<FloatBackend>(
        state, all_pairs, std::vector<bool>(all_pairs.size(), false));
    check.conditional = check.joint_pairs > 0 ? check.pr_cprime / check.joint_pairs : 0.0;
    return check;
}

}  // namespace qnc
