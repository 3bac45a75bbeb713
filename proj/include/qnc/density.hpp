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

#ifndef QNC_DENSITY_HPP_
#define QNC_DENSITY_HPP_

#include <algorithm>
#include <vector>

#include "qnc/backend.hpp"
#include "qnc/error.hpp"
#include "qnc/gate_matrix.hpp"
#include "qnc/gates.hpp"

namespace qnc {

// Density operator over an explicit qubit subset. The subset is kept sorted;
// the qubit at list position p owns bit (m-1-p) of the row/column index, so
// the first listed qubit is the most significant bit, matching the
// statevector convention.
template <class B>
struct DensityMatrix {
    std::vector<Qubit> qubits;                // sorted ascending
    std::vector<typename B::Scalar> entries;  // dim x dim, row-major

    std::size_t dim() const { return std::size_t{1} << qubits.size(); }
    typename B::Scalar& at(std::size_t r, std::size_t c) { return entries[r * dim() + c]; }
    const typename B::Scalar& at(std::size_t r, std::size_t c) const {
        return entries[r * dim() + c];
    }
};

// Scalar density |1><1| of zero qubits; tensor qubits in as needed.
template <class B>
DensityMatrix<B> density_unit() {
    return {{}, {B::scalar_one()}};
}

// |b><b| on a single fresh qubit, tensored into the existing operator.
template <class B>
void density_tensor_basis(DensityMatrix<B>& dm, Qubit q, bool bit) {
    const auto it = std::lower_bound(dm.qubits.begin(), dm.qubits.end(), q);
    if (it != dm.qubits.end() && *it == q) throw Error("density_tensor_basis: qubit already present");
    const std::size_t pos = static_cast<std::size_t>(it - dm.qubits.begin());
    const std::size_t old_m = dm.qubits.size();
    const std::size_t old_dim = dm.dim();
    // New bit sits at index position pos, i.e. bit (new_m - 1 - pos).
    const std::size_t new_bit = old_m - pos;  // in the widened index
    const std::size_t low_mask = (std::size_t{1} << new_bit) - 1;
    auto widen = [&](std::size_t i) {
        std::size_t out = ((i & ~low_mask) << 1) | (i & low_mask);
        if (bit) out |= std::size_t{1} << new_bit;
        return out;
    };
    DensityMatrix<B> out;
    out.qubits = dm.qubits;
    out.qubits.insert(out.qubits.begin() + static_cast<std::ptrdiff_t>(pos), q);
    out.entries.assign((old_dim * 2) * (old_dim * 2), B::scalar_zero());
    for (std::size_t r = 0; r < old_dim; ++r)
        for (std::size_t c = 0; c < old_dim; ++c)
            out.at(widen(r), widen(c)) = std::move(dm.at(r, c));
    dm = std::move(out);
}

// Partial trace over `drop` (must be a subset of dm.qubits).
template <class B>
void density_trace_out(DensityMatrix<B>& dm, const std::vector<Qubit>& drop) {
    if (drop.empty()) return;
    const std::size_t m = dm.qubits.size();
    std::size_t drop_mask = 0;
    std::vector<Qubit> kept;
    for (std::size_t p = 0; p < m; ++p) {
        const bool dropped = std::find(drop.begin(), drop.end(), dm.qubits[p]) != drop.end();
        if (dropped)
            drop_mask |= std::size_t{1} << (m - 1 - p);
        else
            kept.push_back(dm.qubits[p]);
    }
    // Compress an index to its kept bits, preserving relative order.
    auto compress = [&](std::size_t i) {
        std::size_t out = 0;
        for (std::size_t bit = m; bit-- > 0;) {
            if (drop_mask & (std::size_t{1} << bit)) continue;
            out = (out << 1) | ((i >> bit) & 1u);
        }
        return out;
    };
    const std::size_t dim = dm.dim();
    DensityMatrix<B> out;
    out.qubits = std::move(kept);
    out.entries.assign(out.dim() * out.dim(), B::scalar_zero());
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & drop_mask) != (c & drop_mask)) continue;  // off-diagonal in traced space
            out.at(compress(r), compress(c)) += dm.at(r, c);
        }
    dm = std::move(out);
}

// rho -> U rho U^dagger with the gate embedded on dm's qubit subset.
template <class B>
void density_apply_gate(DensityMatrix<B>& dm, const Gate& g) {
    const std::size_t w = g.kind.width();
    if (g.operands.size() != w) throw ValidationError("bad arity for " + gate_to_string(g));
    const std::size_t m = dm.qubits.size();
    std::vector<std::size_t> bits(w);
    for (std::size_t j = 0; j < w; ++j) {
        const auto it = std::lower_bound(dm.qubits.begin(), dm.qubits.end(), g.operands[j]);
        if (it == dm.qubits.end() || *it != g.operands[j])
            throw Error("density_apply_gate: operand " + std::to_string(g.operands[j]) +
                        " outside the tracked subset");
        bits[j] = m - 1 - static_cast<std::size_t>(it - dm.qubits.begin());
    }
    const std::size_t dim = dm.dim();

    auto local_of = [&](std::size_t idx) {
        std::uint64_t local = 0;
        for (std::size_t j = 0; j < w; ++j) local |= ((idx >> bits[j]) & 1u) << (w - 1 - j);
        return local;
    };
    auto with_local = [&](std::size_t idx, std::uint64_t local) {
        for (std::size_t j = 0; j < w; ++j) {
            const std::size_t bit = bits[j];
            const std::uint64_t v = (local >> (w - 1 - j)) & 1u;
            idx = (idx & ~(std::size_t{1} << bit)) | (static_cast<std::size_t>(v) << bit);
        }
        return idx;
    };

    if (is_phase_permutation(g.kind)) {
        DensityMatrix<B> out;
        out.qubits = dm.qubits;
        out.entries.assign(dim * dim, B::scalar_zero());
        std::vector<std::size_t> target(dim);
        std::vector<int> phase(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const BasisAction act = basis_action(g.kind, local_of(i));
            target[i] = with_local(i, act.out_bits);
            phase[i] = act.omega_pow;
        }
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                const int p = phase[r] - phase[c];
                if (p == 0)
                    out.at(target[r], target[c]) = std::move(dm.at(r, c));
                else
                    out.at(target[r], target[c]) = dm.at(r, c) * B::omega_pow(p);
            }
        dm = std::move(out);
        return;
    }

    // Dense kinds: transform rows by U, then columns by conj(U).
    const auto mat = gate_matrix<B>(g.kind);
    const std::size_t block = std::size_t{1} << w;
    std::size_t op_mask = 0;
    for (std::size_t bit : bits) op_mask |= std::size_t{1} << bit;
    std::vector<std::size_t> index(block);
    std::vector<typename B::Scalar> in(block);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & op_mask) continue;
        for (std::uint64_t loc = 0; loc < block; ++loc) index[loc] = with_local(base, loc);
        for (std::size_t c = 0; c < dim; ++c) {  // rows
            for (std::uint64_t loc = 0; loc < block; ++loc) in[loc] = std::move(dm.at(index[loc], c));
            for (std::uint64_t r = 0; r < block; ++r) {
                typename B::Scalar acc = B::scalar_zero();
                for (std::uint64_t t = 0; t < block; ++t) acc += mat.at(r, t) * in[t];
                dm.at(index[r], c) = std::move(acc);
            }
        }
    }
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & op_mask) continue;
        for (std::uint64_t loc = 0; loc < block; ++loc) index[loc] = with_local(base, loc);
        for (std::size_t r = 0; r < dim; ++r) {  // columns
            for (std::uint64_t loc = 0; loc < block; ++loc) in[loc] = std::move(dm.at(r, index[loc]));
            for (std::uint64_t c = 0; c < block; ++c) {
                typename B::Scalar acc = B::scalar_zero();
                for (std::uint64_t t = 0; t < block; ++t)
                    acc += B::conjugate(mat.at(c, t)) * in[t];
                dm.at(r, index[c]) = std::move(acc);
            }
        }
    }
}

template <class B>
typename B::Real density_trace(const DensityMatrix<B>& dm) {
    typename B::Real acc = B::real_zero();
    for (std::size_t i = 0; i < dm.dim(); ++i) acc += B::real_part(dm.at(i, i));
    return acc;
}

}  // namespace qnc

#endif  // QNC_DENSITY_HPP_
