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

#ifndef QNC_TELEPORT_HPP_
#define QNC_TELEPORT_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/simulator.hpp"

namespace qnc {

// One nonadaptive teleportation module: a fresh EPR pair (e1, e2) made by B
// in layer 1; the outgoing segment continues on e2; the old segment and e1
// are rotated by Bdg in layer 3 and measured as the pair (r1, r2). The state
// is teleported correctly iff that pair reads 00.
struct TeleportModule {
    Qubit logical;       // original qubit the module sits on
    Qubit r1, r2;        // measured pair: (old segment, e1)
    Qubit next_segment;  // e2
};

struct CompressionResult {
    Circuit cprime;
    std::size_t k = 0;  // module count
    std::size_t m = 0;  // 2k
    std::vector<TeleportModule> modules;
    // Per original qubit, the ordered physical wire segments it occupies.
    std::vector<std::vector<Qubit>> segments;
    // Original output qubit -> its final segment in cprime.
    std::vector<std::pair<Qubit, Qubit>> output_map;

    std::vector<std::pair<Qubit, Qubit>> bell_pairs() const {
        std::vector<std::pair<Qubit, Qubit>> pairs;
        pairs.reserve(modules.size());
        for (const auto& mod : modules) pairs.emplace_back(mod.r1, mod.r2);
        return pairs;
    }
};

// Rewrite any circuit into (at most) three layers over the same gates plus
// B/Bdg, inserting a teleportation module on each qubit between every two
// consecutive gates touching it. k = sum over qubits of max(0, gates_on_q - 1);
// Pr[C'(x)] = 4^-k * Pr[C(x)].
CompressionResult compress_to_depth3(const Circuit& c);

// Oracle cross-check of the compression on one input.
struct CompressionCheck {
    std::size_t k = 0;
    std::size_t m = 0;
    double pr_c = 0;           // Pr[C(x)]
    double pr_cprime = 0;      // Pr[C'(x)]
    double expected = 0;       // 4^-k * Pr[C(x)]
    double abs_error = 0;      // |pr_cprime - expected|
    double joint_pairs = 0;    // Pr[every Bell pair reads 00]; should be 4^-k
    double conditional = 0;    // Pr[original outputs 0 | all pairs 00]; should equal pr_c
    std::vector<double> pair_marginals;  // per-pair Pr[00]; each should be 1/4
};

CompressionCheck verify_compression(const Circuit& c, const std::vector<bool>& x,
                                    const SimLimits& limits = {});

}  // namespace qnc

#endif  // QNC_TELEPORT_HPP_
