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

#ifndef QNC_DECIDER_HPP_
#define QNC_DECIDER_HPP_

#include <string>
#include <vector>

#include "qnc/backend.hpp"
#include "qnc/circuit.hpp"
#include "qnc/simulator.hpp"

namespace qnc {

enum class Verdict { Accept, Reject };

// Acceptance threshold t in [0,1], either explicit or a preset resolved
// against the circuit depth d:
//   eqnc:      t = 0
//   bqnc-half: t = 2^-(2d+1)
//   master(e): t = 2^-2d * (1 - e)
class Threshold {
  public:
    static Threshold explicit_rational(BigRat t);
    static Threshold eqnc();
    static Threshold bqnc_half();
    static Threshold master(BigRat epsilon);

    BigRat resolve(std::size_t depth) const;
    std::string describe() const;

  private:
    enum class Preset { Explicit, Eqnc, BqncHalf, Master };
    Preset preset_ = Preset::Explicit;
    BigRat value_;  // t for Explicit, epsilon for Master
};

// Guard band for float-mode threshold comparisons: products landing this
// close to 1-t are decided by the raw comparison but flagged fragile.
inline constexpr double kFloatGuardBand = 1e-9;

// Equality tolerance for the float-mode direct procedure (P_q == 1).
inline constexpr double kDirectFloatTol = 1e-12;

struct Decision {
    Verdict verdict = Verdict::Reject;
    std::size_t D = 1;  // dependency-graph degree + 1
    BigRat t;
    BackendKind backend = BackendKind::Float;
    bool direct = false;   // produced by decide_direct
    bool fragile = false;  // float mode came within the guard band of a threshold
    std::vector<Qubit> outputs;
    std::vector<double> per_qubit_p;          // P_q, display precision
    std::vector<std::uint32_t> colors;        // per output, 1-based (empty in direct mode)
    std::vector<double> per_color_p;          // P_{B_i}, display precision

    bool accepted() const { return verdict == Verdict::Accept; }
};

// The five-step gap decision procedure: dependency graph, greedy D-coloring,
// per-output P_q on the lightcone, per-color products, threshold comparison.
// Guarantees (vs the true Pr[C(x)]): accepts whenever Pr >= 1-t, rejects
// whenever Pr < 1-D*t. Requires every gate width <= 2.
Decision decide(const Circuit& c, const std::vector<bool>& x, const Threshold& threshold,
                BackendKind backend = BackendKind::Float, const SimLimits& limits = {});

// Simplified exact-acceptance procedure: accept iff every P_q equals 1
// (exactly in the exact backend, within kDirectFloatTol in float).
Decision decide_direct(const Circuit& c, const std::vector<bool>& x,
                       BackendKind backend = BackendKind::Float, const SimLimits& limits = {});

}  // namespace qnc

#endif  // QNC_DECIDER_HPP_
