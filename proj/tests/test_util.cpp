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

#include "test_util.hpp"

#include <algorithm>

namespace qnc::testutil {

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> m, std::size_t dim) {
    auto at = [&](std::size_t r, std::size_t c) -> std::complex<double>& { return m[r * dim + c]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q) off += std::norm(at(p, q));
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const std::complex<double> apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                // Phase rotation to make the pivot real, then a real Jacobi rotation.
                const std::complex<double> phase = apq / std::abs(apq);
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double b = std::abs(apq);
                const double theta = 0.5 * std::atan2(2 * b, app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                // Column rotation: [p q] <- [p q] * [[c, -s],[s, c]] with phase folded in.
                for (std::size_t r = 0; r < dim; ++r) {
                    const std::complex<double> xp = at(r, p);
                    const std::complex<double> xq = at(r, q);
                    at(r, p) = c * xp + s * phase * xq;
                    at(r, q) = -s * std::conj(phase) * xp + c * xq;
                }
                for (std::size_t col = 0; col < dim; ++col) {
                    const std::complex<double> xp = at(p, col);
                    const std::complex<double> xq = at(q, col);
                    at(p, col) = c * xp + s * std::conj(phase) * xq;
                    at(q, col) = -s * phase * xp + c * xq;
                }
            }
        }
    }
    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i) eig[i] = at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<std::vector<Gate>> enumerate_layers(Qubit n, const std::vector<GateKind>& kinds) {
    // Single gates on n qubits.
    std::vector<Gate> singles;
    for (const GateKind& kind : kinds) {
        const std::size_t w = kind.width();
        if (w == 1) {
            for (Qubit q = 0; q < n; ++q) singles.push_back({kind, {q}});
        } else if (w == 2) {
            for (Qubit a = 0; a < n; ++a)
                for (Qubit b = 0; b < n; ++b)
                    if (a != b) singles.push_back({kind, {a, b}});
        } else {
            throw Error("enumerate_layers handles widths 1 and 2 only");
        }
    }
    // Grow disjoint subsets in increasing single-index order.
    std::vector<std::vector<Gate>> layers;
    std::vector<std::size_t> chosen;
    auto disjoint = [&](const Gate& g) {
        for (std::size_t idx : chosen)
            for (Qubit a : singles[idx].operands)
                for (Qubit b : g.operands)
                    if (a == b) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!chosen.empty()) {
            std::vector<Gate> layer;
            for (std::size_t idx : chosen) layer.push_back(singles[idx]);
            layers.push_back(std::move(layer));
        }
        for (std::size_t i = start; i < singles.size(); ++i) {
            if (!disjoint(singles[i])) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return layers;
}

std::vector<bool> bits_of(std::uint64_t value, std::size_t count) {
    std::vector<bool> bits(count);
    for (std::size_t i = 0; i < count; ++i) bits[i] = (value >> (count - 1 - i)) & 1u;
    return bits;
}

}  // namespace qnc::testutil
