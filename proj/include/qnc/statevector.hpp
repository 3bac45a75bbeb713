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

#ifndef QNC_STATEVECTOR_HPP_
#define QNC_STATEVECTOR_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qnc/backend.hpp"
#include "qnc/circuit.hpp"
#include "qnc/error.hpp"
#include "qnc/gate_matrix.hpp"
#include "qnc/gates.hpp"

namespace qnc {

// Basis convention: qubit q occupies bit (num_qubits - 1 - q) of the state
// index, so |q0 q1 ... q_{n-1}> reads left to right.
inline std::size_t qubit_bit(Qubit q, Qubit num_qubits) {
    return static_cast<std::size_t>(num_qubits) - 1 - q;
}

template <class B>
struct Statevector {
    Qubit num_qubits = 0;
    std::vector<typename B::Scalar> amps;

    std::size_t dim() const { return amps.size(); }
};

// |x, 00...0>: input qubits take bits of x positionally (ascending qubit
// order), every other qubit starts in |0>.
template <class B>
Statevector<B> initial_state(const Circuit& c, const std::vector<bool>& x) {
    if (x.size() != c.inputs.size())
        throw ValidationError("input has " + std::to_string(x.size()) + " bits but circuit has " +
                              std::to_string(c.inputs.size()) + " input qubits");
    Statevector<B> s;
    s.num_qubits = c.num_qubits;
    s.amps.assign(std::size_t{1} << c.num_qubits, B::scalar_zero());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) idx |= std::size_t{1} << qubit_bit(c.inputs[i], c.num_qubits);
    s.amps[idx] = B::scalar_one();
    return s;
}

namespace detail {

// Gather operand-local bits (first operand = MSB) out of a state index.
inline std::uint64_t extract_local(std::size_t idx, const std::vector<std::size_t>& bits) {
    std::uint64_t local = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        local |= ((idx >> bits[j]) & 1u) << (bits.size() - 1 - j);
    return local;
}

inline std::size_t replace_local(std::size_t idx, std::uint64_t local,
                                 const std::vector<std::size_t>& bits) {
    for (std::size_t j = 0; j < bits.size(); ++j) {
        const std::size_t bit = bits[j];
        const std::uint64_t v = (local >> (bits.size() - 1 - j)) & 1u;
        idx = (idx & ~(std::size_t{1} << bit)) | (static_cast<std::size_t>(v) << bit);
    }
    return idx;
}

}  // namespace detail

template <class B>
void apply_gate(Statevector<B>& s, const Gate& g) {
    const std::size_t w = g.kind.width();
    if (g.operands.size() != w) throw ValidationError("bad arity for " + gate_to_string(g));
    std::vector<std::size_t> bits(w);
    for (std::size_t j = 0; j < w; ++j) {
        if (g.operands[j] >= s.num_qubits)
            throw ValidationError("operand out of range in " + gate_to_string(g));
        bits[j] = qubit_bit(g.operands[j], s.num_qubits);
    }

    const std::size_t n = s.dim();
    if (is_phase_permutation(g.kind)) {
        // Every such kind is an involution on basis states (diagonal phases,
        // or XOR-flips controlled by untouched bits), so the whole pass works
        // in place on (i, j) pairs.
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t local = detail::extract_local(i, bits);
            const BasisAction act = basis_action(g.kind, local);
            if (act.out_bits == local) {
                if (act.omega_pow != 0) s.amps[i] = s.amps[i] * B::omega_pow(act.omega_pow);
                continue;
            }
            const std::size_t j = detail::replace_local(i, act.out_bits, bits);
            if (j < i) continue;  // pair already handled
            const BasisAction back = basis_action(g.kind, act.out_bits);
            typename B::Scalar ai = std::move(s.amps[i]);
            typename B::Scalar aj = std::move(s.amps[j]);
            if (act.omega_pow != 0) ai = ai * B::omega_pow(act.omega_pow);
            if (back.omega_pow != 0) aj = aj * B::omega_pow(back.omega_pow);
            s.amps[j] = std::move(ai);
            s.amps[i] = std::move(aj);
        }
        return;
    }

    // Dense path (H, B, Bdg): gather each 2^w block, multiply, scatter.
    const auto m = gate_matrix<B>(g.kind);
    const std::size_t block = std::size_t{1} << w;
    std::size_t op_mask = 0;
    for (std::size_t bit : bits) op_mask |= std::size_t{1} << bit;
    std::vector<typename B::Scalar> in(block), out(block);
    std::vector<std::size_t> index(block);
    for (std::size_t base = 0; base < n; ++base) {
        if (base & op_mask) continue;  // enumerate each block once, at operand bits = 0
        for (std::uint64_t loc = 0; loc < block; ++loc)
            index[loc] = detail::replace_local(base, loc, bits);
        for (std::uint64_t loc = 0; loc < block; ++loc) in[loc] = std::move(s.amps[index[loc]]);
        for (std::uint64_t r = 0; r < block; ++r) {
            typename B::Scalar acc = B::scalar_zero();
            for (std::uint64_t c = 0; c < block; ++c) acc += m.at(r, c) * in[c];
            out[r] = std::move(acc);
        }
        for (std::uint64_t loc = 0; loc < block; ++loc) s.amps[index[loc]] = std::move(out[loc]);
    }
}

template <class B>
typename B::Real state_norm_sq(const Statevector<B>& s) {
    typename B::Real acc = B::real_zero();
    for (const auto& a : s.amps) acc += B::abs_sq(a);
    return acc;
}

}  // namespace qnc

#endif  // QNC_STATEVECTOR_HPP_
