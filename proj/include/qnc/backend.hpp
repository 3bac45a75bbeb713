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

#ifndef QNC_BACKEND_HPP_
#define QNC_BACKEND_HPP_

#include <complex>
#include <numbers>

#include "qnc/cyclotomic.hpp"

namespace qnc {

enum class BackendKind { Float, Exact };

// Numeric backend for simulation. Scalar is the amplitude type, Real the
// probability type. Every built-in gate entry is omega^p / sqrt2^k, so a
// backend only needs that one constructor besides ring operations.
struct FloatBackend {
    static constexpr BackendKind kind = BackendKind::Float;
    using Scalar = std::complex<double>;
    using Real = double;

    static Scalar scalar_zero() { return {0.0, 0.0}; }
    static Scalar scalar_one() { return {1.0, 0.0}; }
    static Scalar omega_pow(int p, unsigned k = 0) {
        const Scalar w = std::polar(1.0, std::numbers::pi * ((p % 8 + 8) % 8) / 4.0);
        return w * std::pow(2.0, -0.5 * static_cast<double>(k));
    }
    static Scalar conjugate(const Scalar& s) { return std::conj(s); }
    static Real abs_sq(const Scalar& s) { return std::norm(s); }
    static Real real_zero() { return 0.0; }
    static Real real_one() { return 1.0; }
    static Real real_part(const Scalar& s) { return s.real(); }
    static double real_to_double(Real r) { return r; }
    static std::complex<double> to_complex(const Scalar& s) { return s; }
};

struct ExactBackend {
    static constexpr BackendKind kind = BackendKind::Exact;
    using Scalar = Cyclo;
    using Real = Cyclo;

    static Scalar scalar_zero() { return Cyclo::zero(); }
    static Scalar scalar_one() { return Cyclo::one(); }
    static Scalar omega_pow(int p, unsigned k = 0) { return Cyclo::omega_pow(p, k); }
    static Scalar conjugate(const Scalar& s) { return s.conj(); }
    static Real abs_sq(const Scalar& s) { return s.abs_sq(); }
    static Real real_zero() { return Cyclo::zero(); }
    static Real real_one() { return Cyclo::one(); }
    // Diagonal entries and probabilities are real elements of the ring already.
    static Real real_part(const Scalar& s) { return s; }
    static double real_to_double(const Real& r) { return r.to_double(); }
    static std::complex<double> to_complex(const Scalar& s) { return s.to_complex(); }
};

}  // namespace qnc

#endif  // QNC_BACKEND_HPP_
