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

#ifndef QNC_GATES_HPP_
#define QNC_GATES_HPP_

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace qnc {

using Qubit = std::uint32_t;

enum class GateOp : std::uint8_t {
    X,
    Y,
    Z,
    H,
    T,
    Toffoli,  // n controls + target; n = 1 is CNOT
    CZ,       // controlled-Z on n qubits (symmetric); n = 1 is plain Z up to naming
    Fanout,   // n targets + source
    Mod,      // n controls + target, flips target iff control sum != 0 (mod q)
    B,        // Bell-pair maker: CNOT * (H on first operand)
    Bdg,      // adjoint of B; rotates the Bell basis back to computational
};

// A gate kind plus its width parameters. Parameterized kinds:
//   Toffoli(n): n >= 1 controls, width n+1
//   CZ(n):      n >= 1 qubits
//   Fanout(n):  n >= 1 targets, width n+1
//   Mod(q, n):  q >= 2, n >= 1 controls, width n+1
struct GateKind {
    GateOp op = GateOp::X;
    std::uint32_t n = 0;  // width parameter (Toffoli/Fanout/Mod controls-or-targets, CZ qubits)
    std::uint32_t q = 0;  // modulus, Mod only

    static GateKind x() { return {GateOp::X, 0, 0}; }
    static GateKind y() { return {GateOp::Y, 0, 0}; }
    static GateKind z() { return {GateOp::Z, 0, 0}; }
    static GateKind h() { return {GateOp::H, 0, 0}; }
    static GateKind t() { return {GateOp::T, 0, 0}; }
    static GateKind cnot() { return toffoli(1); }
    static GateKind toffoli(std::uint32_t n);
    static GateKind cz(std::uint32_t n);
    static GateKind fanout(std::uint32_t n);
    static GateKind mod(std::uint32_t q, std::uint32_t n);
    static GateKind b() { return {GateOp::B, 0, 0}; }
    static GateKind bdg() { return {GateOp::Bdg, 0, 0}; }

    std::size_t width() const;
    std::string name() const;  // canonical text-format mnemonic ("CNOT" for Toffoli(1))

    friend bool operator==(const GateKind& a, const GateKind& b) = default;
};

// A gate applied to an ordered operand list. Operand roles:
//   Toffoli/Mod: controls first, target last
//   Fanout:      targets first, source last
//   CZ:          symmetric
//   B/Bdg:       Hadamard-side qubit first
struct Gate {
    GateKind kind;
    std::vector<Qubit> operands;

    Gate() = default;
    Gate(GateKind k, std::vector<Qubit> ops) : kind(k), operands(std::move(ops)) {}

    friend bool operator==(const Gate& a, const Gate& b) = default;
};

// True when every basis state maps to a single basis state times a power of
// omega = exp(i*pi/4). Everything except H, B and Bdg.
bool is_phase_permutation(const GateKind& kind);

// Basis-state action of a phase-permutation kind on operand-local bits
// (first operand = most significant bit): output bits plus an omega power.
struct BasisAction {
    std::uint64_t out_bits;
    int omega_pow;  // phase omega^p, p in [0, 8)
};
BasisAction basis_action(const GateKind& kind, std::uint64_t in_bits);

std::string gate_to_string(const Gate& g);

}  // namespace qnc

#endif  // QNC_GATES_HPP_
