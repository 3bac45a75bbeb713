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

#include "qnc/gates.hpp"

#include <sstream>

#include "qnc/error.hpp"

namespace qnc {

GateKind GateKind::toffoli(std::uint32_t n) {
    if (n < 1) throw ValidationError("TOFFOLI needs at least one control");
    return {GateOp::Toffoli, n, 0};
}

GateKind GateKind::cz(std::uint32_t n) {
    if (n < 1) throw ValidationError("CZ needs at least one qubit");
    return {GateOp::CZ, n, 0};
}

GateKind GateKind::fanout(std::uint32_t n) {
    if (n < 1) throw ValidationError("FANOUT needs at least one target");
    return {GateOp::Fanout, n, 0};
}

GateKind GateKind::mod(std::uint32_t q, std::uint32_t n) {
    if (q < 2) throw ValidationError("MOD modulus must be >= 2");
    if (n < 1) throw ValidationError("MOD needs at least one control");
    return {GateOp::Mod, n, q};
}

std::size_t GateKind::width() const {
    switch (op) {
        case GateOp::X:
        case GateOp::Y:
        case GateOp::Z:
        case GateOp::H:
        case GateOp::T:
            return 1;
        case GateOp::B:
        case GateOp::Bdg:
            return 2;
        case GateOp::CZ:
            return n;
        case GateOp::Toffoli:
        case GateOp::Fanout:
        case GateOp::Mod:
            return static_cast<std::size_t>(n) + 1;
    }
    return 0;
}

std::string GateKind::name() const {
    switch (op) {
        case GateOp::X: return "X";
        case GateOp::Y: return "Y";
        case GateOp::Z: return "Z";
        case GateOp::H: return "H";
        case GateOp::T: return "T";
        case GateOp::Toffoli: return n == 1 ? "CNOT" : "TOFFOLI";
        case GateOp::CZ: return "CZ";
        case GateOp::Fanout: return "FANOUT";
        case GateOp::Mod: return "MOD";
        case GateOp::B: return "B";
        case GateOp::Bdg: return "BDG";
    }
    return "?";
}

bool is_phase_permutation(const GateKind& kind) {
    switch (kind.op) {
        case GateOp::H:
        case GateOp::B:
        case GateOp::Bdg:
            return false;
        default:
            return true;
    }
}

BasisAction basis_action(const GateKind& kind, std::uint64_t in_bits) {
    const std::size_t w = kind.width();
    // Local layout: operand j holds bit (w-1-j), so the last operand is bit 0.
    switch (kind.op) {
        case GateOp::X:
            return {in_bits ^ 1u, 0};
        case GateOp::Y:
            // Y|b> = i(-1)^b |~b>
            return {in_bits ^ 1u, in_bits ? 6 : 2};
        case GateOp::Z:
            return {in_bits, in_bits ? 4 : 0};
        case GateOp::T:
            return {in_bits, in_bits ? 1 : 0};
        case GateOp::Toffoli: {
            const std::uint64_t controls = in_bits >> 1;
            const std::uint64_t all = (std::uint64_t{1} << kind.n) - 1;
            return {controls == all ? in_bits ^ 1u : in_bits, 0};
        }
        case GateOp::CZ: {
            const std::uint64_t all = (std::uint64_t{1} << w) - 1;
            return {in_bits, in_bits == all ? 4 : 0};
        }
        case GateOp::Fanout: {
            // Source is bit 0; XOR it into every target bit.
            if (in_bits & 1u) {
                const std::uint64_t targets = ((std::uint64_t{1} << kind.n) - 1) << 1;
                return {in_bits ^ targets, 0};
            }
            return {in_bits, 0};
        }
        case GateOp::Mod: {
            std::uint32_t sum = 0;
            for (std::uint32_t i = 0; i < kind.n; ++i) sum += (in_bits >> (i + 1)) & 1u;
            return {sum % kind.q != 0 ? in_bits ^ 1u : in_bits, 0};
        }
        case GateOp::H:
        case GateOp::B:
        case GateOp::Bdg:
            break;
    }
    throw Error("basis_action: " + kind.name() + " is not a phase-permutation gate");
}

std::string gate_to_string(const Gate& g) {
    std::ostringstream out;
    out << g.kind.name();
    if (g.kind.op == GateOp::Mod) out << ' ' << g.kind.q;
    for (Qubit q : g.operands) out << ' ' << q;
    return out.str();
}

}  // namespace qnc
