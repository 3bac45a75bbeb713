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

#ifndef QNC_IO_HPP_
#define QNC_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "qnc/circuit.hpp"

namespace qnc {

// Line-oriented circuit text format (extension .qnc):
//
//   # comment
//   qubits 4
//   inputs 0 1
//   outputs 2 3
//   H 0
//   CNOT 0 1
//   MOD 3 0 1 2        # modulus first, then controls, target last
//   ---                # optional explicit layer separator
//   TOFFOLI 0 1 2
//
// The `qubits` line must precede inputs/outputs/gates. Without separators the
// gates are layerized canonically; with separators the declared layers are
// validated as given. Indices are 0-based decimals, encoding ASCII/UTF-8.

// Parses the format above; throws ParseError with 1-based line/column on any
// malformed input.
Circuit parse_circuit(std::string_view text);

// Canonical emission: header, then canonical layers separated by `---`, gates
// within a layer ordered by lowest operand. parse(emit(c)) is structurally
// equal to c.
std::string emit_circuit(const Circuit& c);

// Deterministic random circuit: fills up to `target_depth` layers with
// pairwise-disjoint gates drawn from the named set ("clifford+t" = H,T,X,Z,
// CNOT; "full" adds Y, TOFFOLI(2), B). Inputs default to the first ceil(n/2)
// qubits, outputs to the last ceil(n/2).
Circuit gen_random(Qubit num_qubits, std::size_t target_depth, const std::string& gateset,
                   std::uint64_t seed);

// Hard ceiling on `qubits N` accepted by the parser; keeps hostile inputs
// from forcing giant allocations.
inline constexpr std::uint32_t kMaxParsedQubits = 1'000'000;

}  // namespace qnc

#endif  // QNC_IO_HPP_
