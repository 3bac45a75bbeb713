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

#include "qnc/io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "qnc/error.hpp"

namespace qnc {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;  // comment
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#')
            ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return tokens;
}

std::uint32_t parse_index(const Token& tok, int line, std::uint32_t max_value,
                          const char* what) {
    std::uint32_t value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, tok.column, std::string(what) + " '" + tok.text + "' is too large");
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, tok.column, "expected a " + std::string(what) + ", got '" +
                                               tok.text + "'");
    if (value > max_value)
        throw ParseError(line, tok.column,
                         std::string(what) + " " + tok.text + " exceeds limit " +
                             std::to_string(max_value));
    return value;
}

struct KindSpec {
    bool known = false;
    GateOp op = GateOp::X;
    std::size_t min_args = 0;   // operand tokens, not counting MOD's modulus
    bool variadic = false;
};

KindSpec lookup_kind(const std::string& name) {
    if (name == "X") return {true, GateOp::X, 1, false};
    if (name == "Y") return {true, GateOp::Y, 1, false};
    if (name == "Z") return {true, GateOp::Z, 1, false};
    if (name == "H") return {true, GateOp::H, 1, false};
    if (name == "T") return {true, GateOp::T, 1, false};
    if (name == "CNOT") return {true, GateOp::Toffoli, 2, false};
    if (name == "TOFFOLI") return {true, GateOp::Toffoli, 2, true};
    if (name == "CZ") return {true, GateOp::CZ, 1, true};
    if (name == "FANOUT") return {true, GateOp::Fanout, 2, true};
    if (name == "MOD") return {true, GateOp::Mod, 2, true};
    if (name == "B") return {true, GateOp::B, 2, false};
    if (name == "BDG") return {true, GateOp::Bdg, 2, false};
    return {};
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    bool have_qubits = false, have_inputs = false, have_outputs = false;
    std::uint32_t num_qubits = 0;
    std::vector<Qubit> inputs, outputs;
    bool explicit_layers = false;
    bool any_gate = false;
    std::vector<std::vector<Gate>> layers;
    std::vector<Gate> current;
    std::set<Qubit> current_used;  // explicit-layer disjointness check

    auto close_layer = [&] {
        if (!current.empty()) layers.push_back(std::move(current));
        current.clear();
        current_used.clear();
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens.front();

        if (head.text == "qubits") {
            if (have_qubits) throw ParseError(line_no, head.column, "duplicate 'qubits' line");
            if (any_gate)
                throw ParseError(line_no, head.column, "'qubits' must precede all gates");
            if (tokens.size() != 2)
                throw ParseError(line_no, head.column, "'qubits' expects exactly one count");
            num_qubits = parse_index(tokens[1], line_no, kMaxParsedQubits, "qubit count");
            if (num_qubits == 0)
                throw ParseError(line_no, tokens[1].column, "circuit needs at least one qubit");
            have_qubits = true;
            continue;
        }
        if (head.text == "inputs" || head.text == "outputs") {
            const bool is_inputs = head.text == "inputs";
            if (!have_qubits)
                throw ParseError(line_no, head.column, "'qubits' line must come first");
            if ((is_inputs && have_inputs) || (!is_inputs && have_outputs))
                throw ParseError(line_no, head.column, "duplicate '" + head.text + "' line");
            std::vector<Qubit>& dst = is_inputs ? inputs : outputs;
            std::set<Qubit> seen;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const Qubit q = parse_index(tokens[i], line_no, num_qubits - 1, "qubit index");
                if (!seen.insert(q).second)
                    throw ParseError(line_no, tokens[i].column,
                                     "qubit " + tokens[i].text + " listed twice");
                dst.push_back(q);
            }
            (is_inputs ? have_inputs : have_outputs) = true;
            continue;
        }
        if (head.text == "---") {
            if (!have_qubits)
                throw ParseError(line_no, head.column, "'qubits' line must come first");
            explicit_layers = true;
            close_layer();
            continue;
        }

        // Gate line.
        const KindSpec spec = lookup_kind(head.text);
        if (!spec.known)
            throw ParseError(line_no, head.column, "unknown gate name '" + head.text + "'");
        if (!have_qubits) throw ParseError(line_no, head.column, "'qubits' line must come first");

        std::size_t arg_start = 1;
        GateKind kind;
        if (spec.op == GateOp::Mod) {
            if (tokens.size() < 2)
                throw ParseError(line_no, head.column, "MOD expects a modulus and operands");
            const std::uint32_t q = parse_index(tokens[1], line_no, kMaxParsedQubits, "modulus");
            if (q < 2) throw ParseError(line_no, tokens[1].column, "modulus must be >= 2");
            arg_start = 2;
            const std::size_t ops = tokens.size() - arg_start;
            if (ops < 2)
                throw ParseError(line_no, head.column,
                                 "MOD expects at least one control and a target");
            kind = GateKind::mod(q, static_cast<std::uint32_t>(ops - 1));
        } else {
            const std::size_t ops = tokens.size() - 1;
            if (ops < spec.min_args || (!spec.variadic && ops != spec.min_args))
                throw ParseError(line_no, head.column,
                                 head.text + " expects " + (spec.variadic ? "at least " : "") +
                                     std::to_string(spec.min_args) + " operand(s), got " +
                                     std::to_string(ops));
            switch (spec.op) {
                case GateOp::Toffoli:
                    kind = GateKind::toffoli(static_cast<std::uint32_t>(ops - 1));
                    break;
                case GateOp::CZ:
                    kind = GateKind::cz(static_cast<std::uint32_t>(ops));
                    break;
                case GateOp::Fanout:
                    kind = GateKind::fanout(static_cast<std::uint32_t>(ops - 1));
                    break;
                default:
                    kind = GateKind{spec.op, 0, 0};
                    break;
            }
        }

        Gate gate;
        gate.kind = kind;
        std::set<Qubit> seen;
        for (std::size_t i = arg_start; i < tokens.size(); ++i) {
            const Qubit q = parse_index(tokens[i], line_no, num_qubits - 1, "qubit index");
            if (!seen.insert(q).second)
                throw ParseError(line_no, tokens[i].column,
                                 "duplicate operand " + tokens[i].text);
            gate.operands.push_back(q);
        }
        if (explicit_layers) {
            for (Qubit q : gate.operands)
                if (!current_used.insert(q).second)
                    throw ParseError(line_no, head.column,
                                     "layer overlap on qubit " + std::to_string(q));
        }
        any_gate = true;
        current.push_back(std::move(gate));
    }

    if (!have_qubits) throw ParseError(std::max(line_no, 1), 1, "missing 'qubits' header");
    close_layer();

    if (explicit_layers)
        return make_layered(std::move(layers), num_qubits, std::move(inputs), std::move(outputs));
    std::vector<Gate> gates;
    for (auto& layer : layers)
        for (auto& g : layer) gates.push_back(std::move(g));
    return layerize(std::move(gates), num_qubits, std::move(inputs), std::move(outputs));
}

std::string emit_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits << '\n';
    out << "inputs";
    for (Qubit q : c.inputs) out << ' ' << q;
    out << '\n';
    out << "outputs";
    for (Qubit q : c.outputs) out << ' ' << q;
    out << '\n';

    auto layers = asap_layers(flatten(c), c.num_qubits);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        if (l > 0) out << "---\n";
        auto& layer = layers[l];
        std::sort(layer.begin(), layer.end(), [](const Gate& a, const Gate& b) {
            return *std::min_element(a.operands.begin(), a.operands.end()) <
                   *std::min_element(b.operands.begin(), b.operands.end());
        });
        for (const Gate& g : layer) out << gate_to_string(g) << '\n';
    }
    return out.str();
}

namespace {

// Deterministic helpers: std::uniform_int_distribution is implementation
// defined, so roll our own unbiased pick.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

Circuit gen_random(Qubit num_qubits, std::size_t target_depth, const std::string& gateset,
                   std::uint64_t seed) {
    if (num_qubits < 1) throw ValidationError("gen_random needs at least one qubit");
    std::vector<GateKind> kinds;
    if (gateset == "clifford+t") {
        kinds = {GateKind::h(), GateKind::t(), GateKind::x(), GateKind::z(), GateKind::cnot()};
    } else if (gateset == "full") {
        kinds = {GateKind::h(),    GateKind::t(), GateKind::x(),
                 GateKind::z(),    GateKind::y(), GateKind::cnot(),
                 GateKind::toffoli(2), GateKind::b()};
    } else {
        throw ValidationError("unknown gateset '" + gateset + "'");
    }

    std::mt19937_64 rng(seed);
    std::vector<std::vector<Gate>> layers;
    std::vector<Qubit> pool(num_qubits);
    for (Qubit q = 0; q < num_qubits; ++q) pool[q] = q;

    for (std::size_t d = 0; d < target_depth; ++d) {
        // Fisher-Yates shuffle, then carve disjoint operand groups greedily.
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[pick(rng, i)]);
        std::vector<Gate> layer;
        std::size_t at = 0;
        while (at < pool.size()) {
            if (pick(rng, 4) == 0) {  // leave this qubit idle
                ++at;
                continue;
            }
            const GateKind kind = kinds[pick(rng, kinds.size())];
            const std::size_t w = kind.width();
            if (at + w > pool.size()) {
                ++at;
                continue;
            }
            Gate g;
            g.kind = kind;
            g.operands.assign(pool.begin() + static_cast<std::ptrdiff_t>(at),
                              pool.begin() + static_cast<std::ptrdiff_t>(at + w));
            layer.push_back(std::move(g));
            at += w;
        }
        if (!layer.empty()) layers.push_back(std::move(layer));
    }

    const Qubit half = (num_qubits + 1) / 2;
    std::vector<Qubit> inputs, outputs;
    for (Qubit q = 0; q < half; ++q) inputs.push_back(q);
    for (Qubit q = num_qubits - half; q < num_qubits; ++q) outputs.push_back(q);
    return make_layered(std::move(layers), num_qubits, std::move(inputs), std::move(outputs));
}

}  // namespace qnc
