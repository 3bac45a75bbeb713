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

#ifndef QNC_TESTS_TEST_UTIL_HPP_
#define QNC_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/gate_matrix.hpp"
#include "qnc/gates.hpp"

namespace qnc::testutil {

// Kronecker product, independent of the library's embedding logic.
template <class B>
GateMatrix<B> kron(const GateMatrix<B>& a, const GateMatrix<B>& b) {
    GateMatrix<B> out;
    out.width = a.width + b.width;
    out.entries.assign(out.dim() * out.dim(), B::scalar_zero());
    for (std::size_t ra = 0; ra < a.dim(); ++ra)
        for (std::size_t ca = 0; ca < a.dim(); ++ca)
            for (std::size_t rb = 0; rb < b.dim(); ++rb)
                for (std::size_t cb = 0; cb < b.dim(); ++cb)
                    out.at(ra * b.dim() + rb, ca * b.dim() + cb) = a.at(ra, ca) * b.at(rb, cb);
    return out;
}

template <class B>
GateMatrix<B> identity_matrix(std::size_t width) {
    GateMatrix<B> out;
    out.width = width;
    out.entries.assign(out.dim() * out.dim(), B::scalar_zero());
    for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) = B::scalar_one();
    return out;
}

// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps; good enough for
// the tiny density operators in these tests.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> m, std::size_t dim);

// All layers buildable from the given single-gate choices on `n` qubits:
// every set of pairwise-disjoint gates, nonempty. Used for exhaustive sweeps.
std::vector<std::vector<Gate>> enumerate_layers(Qubit n, const std::vector<GateKind>& kinds);

// All circuits with up to `max_layers` layers over the enumerated layer set.
// Invokes `fn` with each flat gate list (the empty circuit included).
template <class Fn>
void for_each_circuit(const std::vector<std::vector<Gate>>& layer_choices, std::size_t max_layers,
                      Fn&& fn) {
    std::vector<Gate> flat;
    fn(flat);
    std::vector<std::size_t> stack;
    // Iterative product enumeration over layer choices, depth 1..max_layers.
    for (std::size_t depth = 1; depth <= max_layers; ++depth) {
        stack.assign(depth, 0);
        while (true) {
            flat.clear();
            for (std::size_t l = 0; l < depth; ++l)
                for (const Gate& g : layer_choices[stack[l]]) flat.push_back(g);
            fn(flat);
            std::size_t pos = depth;
            while (pos > 0) {
                if (++stack[pos - 1] < layer_choices.size()) break;
                stack[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
}

std::vector<bool> bits_of(std::uint64_t value, std::size_t count);

}  // namespace qnc::testutil

#endif  // QNC_TESTS_TEST_UTIL_HPP_
