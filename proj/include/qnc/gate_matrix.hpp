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

#ifndef QNC_GATE_MATRIX_HPP_
#define QNC_GATE_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "qnc/backend.hpp"
#include "qnc/error.hpp"
#include "qnc/gates.hpp"

namespace qnc {

inline constexpr std::size_t kDefaultMatrixWidthCap = 20;

// Dense 2^width x 2^width matrix in the operand-order basis convention:
// the first operand is the most significant bit of the row/column index.
template <class B>
struct GateMatrix {
    std::size_t width = 0;
    std::vector<typename B::Scalar> entries;  // row-major

    std::size_t dim() const { return std::size_t{1} << width; }
    typename B::Scalar& at(std::size_t r, std::size_t c) { return entries[r * dim() + c]; }
    const typename B::Scalar& at(std::size_t r, std::size_t c) const {
        return entries[r * dim() + c];
    }
};

template <class B>
GateMatrix<B> matrix_multiply(const GateMatrix<B>& lhs, const GateMatrix<B>& rhs) {
    GateMatrix<B> out{lhs.width, std::vector<typename B::Scalar>(lhs.entries.size(), B::scalar_zero())};
    const std::size_t n = lhs.dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += lhs.at(r, t) * rhs.at(t, c);
    return out;
}

template <class B>
GateMatrix<B> matrix_adjoint(const GateMatrix<B>& m) {
    GateMatrix<B> out{m.width, std::vector<typename B::Scalar>(m.entries.size(), B::scalar_zero())};
    const std::size_t n = m.dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = B::conjugate(m.at(c, r));
    return out;
}

// Unitary of a gate kind. Entries are exact in the Exact backend.
template <class B>
GateMatrix<B> gate_matrix(const GateKind& kind, std::size_t width_cap = kDefaultMatrixWidthCap) {
    const std::size_t w = kind.width();
    if (w > width_cap)
        throw CapError("gate width " + std::to_string(w) + " exceeds matrix cap " +
                       std::to_string(width_cap));
    const std::size_t dim = std::size_t{1} << w;
    GateMatrix<B> m{w, std::vector<typename B::Scalar>(dim * dim, B::scalar_zero())};

    if (is_phase_permutation(kind)) {
        for (std::size_t col = 0; col < dim; ++col) {
            const BasisAction act = basis_action(kind, col);
            m.at(act.out_bits, col) = B::omega_pow(act.omega_pow);
        }
        return m;
    }

    switch (kind.op) {
        case GateOp::H:
            // (|0> + (-1)^b |1>)/sqrt2 columns
            m.at(0, 0) = B::omega_pow(0, 1);
            m.at(1, 0) = B::omega_pow(0, 1);
            m.at(0, 1) = B::omega_pow(0, 1);
            m.at(1, 1) = B::omega_pow(4, 1);
            return m;
        case GateOp::B: {
            // CNOT * (H (x) I), Hadamard side = first operand = control of the CNOT.
            GateMatrix<B> h_i{2, std::vector<typename B::Scalar>(16, B::scalar_zero())};
            const auto h = gate_matrix<B>(GateKind::h());
            // entry[(a b), (a' b')] = H[a][a'] * (b == b')
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t ap = 0; ap < 2; ++ap)
                    for (std::size_t b = 0; b < 2; ++b)
                        h_i.at(a * 2 + b, ap * 2 + b) = h.at(a, ap);
            const auto cnot = gate_matrix<B>(GateKind::cnot());
            return matrix_multiply(cnot, h_i);
        }
        case GateOp::Bdg:
            return matrix_adjoint(gate_matrix<B>(GateKind::b()));
        default:
            break;
    }
    throw Error("gate_matrix: unhandled kind " + kind.name());
}

}  // namespace qnc

#endif  // QNC_GATE_MATRIX_HPP_
