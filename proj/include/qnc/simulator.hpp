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

#ifndef QNC_SIMULATOR_HPP_
#define QNC_SIMULATOR_HPP_

#include <functional>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/density.hpp"
#include "qnc/error.hpp"
#include "qnc/lightcone.hpp"
#include "qnc/statevector.hpp"

namespace qnc {

struct SimLimits {
    Qubit max_statevector_qubits = 22;
    Qubit max_cone_qubits = 16;
    std::size_t max_matrix_width = kDefaultMatrixWidthCap;
    std::size_t max_input_sweep = 12;  // guard for exhaustive input sweeps
};

// |x, 00...0> evolved through every layer in order.
template <class B>
Statevector<B> run_statevector(const Circuit& c, const std::vector<bool>& x,
                               const SimLimits& limits = {}) {
    validate_or_throw(c);
    if (c.num_qubits > limits.max_statevector_qubits)
        throw CapError("statevector needs " + std::to_string(c.num_qubits) +
                       " qubits, cap is " + std::to_string(limits.max_statevector_qubits));
    Statevector<B> s = initial_state<B>(c, x);
    for (const auto& layer : c.layers)
        for (const Gate& g : layer) apply_gate(s, g);
    return s;
}

// Probability that the listed qubits are observed in the outcome bit pattern
// u (positional), everything else traced out.
template <class B>
typename B::Real probability_of_outcome(const Statevector<B>& s, const std::vector<Qubit>& subset,
                                        const std::vector<bool>& u) {
    if (subset.size() != u.size()) throw ValidationError("outcome length does not match subset");
    std::size_t mask = 0, want = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= s.num_qubits) throw ValidationError("marginal qubit out of range");
        const std::size_t bit = std::size_t{1} << qubit_bit(subset[i], s.num_qubits);
        if (mask & bit) throw ValidationError("marginal subset lists a qubit twice");
        mask |= bit;
        if (u[i]) want |= bit;
    }
    typename B::Real acc = B::real_zero();
    for (std::size_t i = 0; i < s.dim(); ++i)
        if ((i & mask) == want) acc += B::abs_sq(s.amps[i]);
    return acc;
}

template <class B>
typename B::Real marginal_probability(const Circuit& c, const std::vector<bool>& x,
                                      const std::vector<Qubit>& subset, const std::vector<bool>& u,
                                      const SimLimits& limits = {}) {
    const auto s = run_statevector<B>(c, x, limits);
    return probability_of_outcome<B>(s, subset, u);
}

// Pr[C(x)]: all output qubits observed 0.
template <class B>
typename B::Real acceptance_probability(const Circuit& c, const std::vector<bool>& x,
                                        const SimLimits& limits = {}) {
    const auto s = run_statevector<B>(c, x, limits);
    return probability_of_outcome<B>(s, c.outputs, std::vector<bool>(c.outputs.size(), false));
}

struct ReducedStats {
    std::size_t cone_size = 0;
    std::size_t max_active = 0;  // widest tracked qubit set
    std::size_t max_dim = 0;     // largest density-matrix dimension
    bool used_fallback = false;  // cone-restricted statevector instead of density walk
};

// P_q: probability of observing 0 on output qubit q, computed on the
// lightcone only. Layers are processed in order; a gate participates iff it
// still has a forward path to q; after each layer, qubits that lost their
// path are traced out. Qubits join the tracked set lazily at their first
// participating gate (they are in a known basis state until then), so the
// density matrix never exceeds 2^|D_q| and is usually far smaller.
//
// Circuits with a participating gate wider than two qubits fall back to a
// cone-restricted statevector (same filter, no density operators).
template <class B>
typename B::Real reduced_density_marginal(
    const Circuit& c, const std::vector<bool>& x, Qubit q, const SimLimits& limits = {},
    ReducedStats* stats = nullptr,
    const std::function<void(const DensityMatrix<B>&)>& observe_layer = {}) {
    validate_or_throw(c);
    if (x.size() != c.inputs.size()) throw ValidationError("input length mismatch");
    if (q >= c.num_qubits) throw ValidationError("marginal qubit out of range");

    const auto layers = asap_layers(flatten(c), c.num_qubits);
    const auto relevant = suffix_cones(layers, c.num_qubits, q);
    const auto& cone = relevant.front();
    if (cone.size() > limits.max_cone_qubits)
        throw CapError("lightcone of qubit " + std::to_string(q) + " has " +
                       std::to_string(cone.size()) + " qubits, cap is " +
                       std::to_string(limits.max_cone_qubits));
    if (stats) {
        *stats = ReducedStats{};
        stats->cone_size = cone.size();
    }

    auto initial_bit = [&](Qubit p) {
        const auto it = std::lower_bound(c.inputs.begin(), c.inputs.end(), p);
        if (it != c.inputs.end() && *it == p) return static_cast<bool>(x[it - c.inputs.begin()]);
        return false;  // ancilla
    };
    auto in_set = [](const std::vector<Qubit>& sorted, Qubit p) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
        return it != sorted.end() && *it == p;
    };
    auto participates = [&](const Gate& g, const std::vector<Qubit>& next_rel) {
        for (Qubit p : g.operands)
            if (in_set(next_rel, p)) return true;
        return false;
    };

    bool wide = false;
    for (std::size_t l = 0; l < layers.size() && !wide; ++l)
        for (const Gate& g : layers[l])
            if (g.kind.width() > 2 && participates(g, relevant[l + 1])) wide = true;

    if (wide) {
        // Cone-restricted statevector fallback for wide gates.
        if (stats) stats->used_fallback = true;
        Circuit sub;
        sub.num_qubits = static_cast<Qubit>(cone.size());
        std::vector<Qubit> remap(c.num_qubits, 0);
        for (std::size_t i = 0; i < cone.size(); ++i) remap[cone[i]] = static_cast<Qubit>(i);
        std::vector<bool> bits;
        for (Qubit p : cone) {
            sub.inputs.push_back(remap[p]);
            bits.push_back(initial_bit(p));
        }
        std::vector<Gate> gates;
        for (std::size_t l = 0; l < layers.size(); ++l)
            for (const Gate& g : layers[l])
                if (participates(g, relevant[l + 1])) {
                    Gate r = g;
                    for (Qubit& p : r.operands) p = remap[p];
                    gates.push_back(std::move(r));
                }
        sub.layers = asap_layers(gates, sub.num_qubits);
        if (stats) {
            stats->max_active = cone.size();
            stats->max_dim = std::size_t{1} << cone.size();
        }
        SimLimits sub_limits = limits;
        sub_limits.max_statevector_qubits = std::max(limits.max_statevector_qubits,
                                                     static_cast<Qubit>(cone.size()));
        const auto s = run_statevector<B>(sub, bits, sub_limits);
        return probability_of_outcome<B>(s, {remap[q]}, {false});
    }

    DensityMatrix<B> dm = density_unit<B>();
    auto note_size = [&] {
        if (!stats) return;
        stats->max_active = std::max(stats->max_active, dm.qubits.size());
        stats->max_dim = std::max(stats->max_dim, dm.dim());
    };
    note_size();
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const auto& next_rel = relevant[l + 1];
        for (const Gate& g : layers[l]) {
            if (!participates(g, next_rel)) continue;
            for (Qubit p : g.operands)
                if (!in_set(dm.qubits, p)) {
                    density_tensor_basis(dm, p, initial_bit(p));
                    note_size();
                }
            density_apply_gate(dm, g);
        }
        std::vector<Qubit> drop;
        for (Qubit p : dm.qubits)
            if (!in_set(next_rel, p)) drop.push_back(p);
        density_trace_out(dm, drop);
        if (observe_layer) observe_layer(dm);
    }

    if (dm.qubits.empty()) {
        // q was never touched by a participating gate; it kept its initial value.
        return initial_bit(q) ? B::real_zero() : B::real_one();
    }
    return B::real_part(dm.at(0, 0));  // single remaining qubit, bit 0 on both sides
}

}  // namespace qnc

#endif  // QNC_SIMULATOR_HPP_
