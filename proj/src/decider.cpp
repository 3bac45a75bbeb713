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

#include "qnc/decider.hpp"

#include <cmath>

#include "qnc/error.hpp"
#include "qnc/lightcone.hpp"

namespace qnc {

Threshold Threshold::explicit_rational(BigRat t) {
    Threshold th;
    th.preset_ = Preset::Explicit;
    th.value_ = std::move(t);
    return th;
}

Threshold Threshold::eqnc() {
    Threshold th;
    th.preset_ = Preset::Eqnc;
    return th;
}

Threshold Threshold::bqnc_half() {
    Threshold th;
    th.preset_ = Preset::BqncHalf;
    return th;
}

Threshold Threshold::master(BigRat epsilon) {
    Threshold th;
    th.preset_ = Preset::Master;
    th.value_ = std::move(epsilon);
    return th;
}

BigRat Threshold::resolve(std::size_t depth) const {
    switch (preset_) {
        case Preset::Explicit:
            return value_;
        case Preset::Eqnc:
            return BigRat(0);
        case Preset::BqncHalf:
            return BigRat(BigInt(1), BigInt(1) << (2 * depth + 1));
        case Preset::Master:
            if (value_ < 0 || value_ > 1) throw ValidationError("epsilon must be in [0,1]");
            return (BigRat(1) - value_) / BigRat(BigInt(1) << (2 * depth));
    }
    return BigRat(0);
}

std::string Threshold::describe() const {
    switch (preset_) {
        case Preset::Explicit:
            return value_.str();
        case Preset::Eqnc:
            return "eqnc (t = 0)";
        case Preset::BqncHalf:
            return "bqnc-half (t = 2^-(2d+1))";
        case Preset::Master:
            return "master (t = 2^-2d * (1 - " + value_.str() + "))";
    }
    return "?";
}

namespace {

void require_narrow_gates(const Circuit& c) {
    for (const auto& layer : c.layers)
        for (const Gate& g : layer)
            if (g.kind.width() > 2)
                throw ValidationError("decision procedure requires gates of width <= 2, found " +
                                      gate_to_string(g));
}

template <class B>
std::vector<typename B::Real> per_output_marginals(const Circuit& c, const std::vector<bool>& x,
                                                   const SimLimits& limits) {
    std::vector<typename B::Real> ps;
    ps.reserve(c.outputs.size());
    for (Qubit q : c.outputs) ps.push_back(reduced_density_marginal<B>(c, x, q, limits));
    return ps;
}

}  // namespace

Decision decide(const Circuit& c, const std::vector<bool>& x, const Threshold& threshold,
                BackendKind backend, const SimLimits& limits) {
    validate_or_throw(c);
    require_narrow_gates(c);
    const std::size_t d = depth(c);
    const BigRat t = threshold.resolve(d);
    if (t < 0 || t > 1) throw ValidationError("threshold t must be in [0,1], got " + t.str());
    const BigRat one_minus_t = BigRat(1) - t;

    Decision dec;
    dec.t = t;
    dec.backend = backend;
    dec.outputs = c.outputs;

    const DependencyGraph g = dependency_graph(c);
    dec.D = g.max_degree() + 1;
    const Coloring coloring = greedy_coloring(g);
    dec.colors = coloring.colors;
    const std::uint32_t ncolors = std::max<std::uint32_t>(coloring.num_colors, 1);

    bool all_above = true;
    if (backend == BackendKind::Exact) {
        const auto ps = per_output_marginals<ExactBackend>(c, x, limits);
        std::vector<Cyclo> products(ncolors, Cyclo::one());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            dec.per_qubit_p.push_back(ps[i].to_double());
            products[coloring.colors[i] - 1] *= ps[i];
        }
        for (const Cyclo& p : products) {
            dec.per_color_p.push_back(p.to_double());
            if (p.compare(one_minus_t) < 0) all_above = false;
        }
    } else {
        const double bound = one_minus_t.convert_to<double>();
        const auto ps = per_output_marginals<FloatBackend>(c, x, limits);
        std::vector<double> products(ncolors, 1.0);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            dec.per_qubit_p.push_back(ps[i]);
            products[coloring.colors[i] - 1] *= ps[i];
        }
        for (double p : products) {
            dec.per_color_p.push_back(p);
            if (std::abs(p - bound) < kFloatGuardBand) dec.fragile = true;
            if (p < bound) all_above = false;
        }
    }
    dec.verdict = all_above ? Verdict::Accept : Verdict::Reject;
    return dec;
}

Decision decide_direct(const Circuit& c, const std::vector<bool>& x, BackendKind backend,
                       const SimLimits& limits) {
    validate_or_throw(c);
    require_narrow_gates(c);

    Decision dec;
    dec.direct = true;
    dec.t = BigRat(0);
    dec.backend = backend;
    dec.outputs = c.outputs;
    dec.D = dependency_graph(c).max_degree() + 1;

    bool all_one = true;
    if (backend == BackendKind::Exact) {
        for (Qubit q : c.outputs) {
            const Cyclo p = reduced_density_marginal<ExactBackend>(c, x, q, limits);
            dec.per_qubit_p.push_back(p.to_double());
            if (!p.is_one()) all_one = false;
        }
    } else {
        for (Qubit q : c.outputs) {
            const double p = reduced_density_marginal<FloatBackend>(c, x, q, limits);
            dec.per_qubit_p.push_back(p);
            const double gap = std::abs(p - 1.0);
            if (gap > kDirectFloatTol) all_one = false;
            if (gap > kDirectFloatTol && gap < kFloatGuardBand) dec.fragile = true;
        }
    }
    dec.verdict = all_one ? Verdict::Accept : Verdict::Reject;
    return dec;
}

}  // namespace qnc
