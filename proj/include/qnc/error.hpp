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

#ifndef QNC_ERROR_HPP_
#define QNC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qnc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural problems in a circuit or gate (bad arity, out-of-range index, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A configured resource limit was exceeded (statevector width, cone size, ...).
struct CapError : Error {
    explicit CapError(const std::string& msg) : Error(msg) {}
};

// Positioned diagnostic from the circuit-file parser. Lines and columns are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace qnc

#endif  // QNC_ERROR_HPP_
