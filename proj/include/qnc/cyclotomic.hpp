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

#ifndef QNC_CYCLOTOMIC_HPP_
#define QNC_CYCLOTOMIC_HPP_

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qnc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact scalar for the built-in gate set: an element of Z[w]/sqrt(2)^k with
// w = exp(i*pi/4), stored as (a + b*w + c*w^2 + d*w^3) / sqrt(2)^k.
//
// Identities used throughout: w^4 = -1, w^2 = i, sqrt(2) = w - w^3.
// Canonical form: k = 0, or the numerator is not divisible by sqrt(2)
// (divisibility holds iff a = c and b = d mod 2). Zero is (0,0,0,0)/sqrt2^0.
// Real elements have c = 0 and d = -b, i.e. the value (a + b*sqrt2)/sqrt2^k;
// all probabilities computed by the exact backend land in that subring and
// compare exactly against rational thresholds.
class Cyclo {
  public:
    Cyclo() = default;  // zero

    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return integer(1); }
    static Cyclo integer(long v);
    static Cyclo from_parts(BigInt a, BigInt b, BigInt c, BigInt d, unsigned k);
    // w^p / sqrt(2)^k, any integer p (reduced mod 8 with w^4 = -1).
    static Cyclo omega_pow(int p, unsigned k = 0);

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& rhs);
    Cyclo& operator-=(const Cyclo& rhs);
    Cyclo& operator*=(const Cyclo& rhs);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) = default;

    Cyclo conj() const;           // complex conjugate: w |-> w^-1
    Cyclo abs_sq() const;         // this * conj(this); always real
    bool is_zero() const;
    bool is_real() const;         // c == 0 and d == -b
    bool is_one() const;

    // Exact comparison of a real element against a rational: sign of (value - r).
    // Requires is_real().
    int compare(const BigRat& r) const;
    bool equals(const BigRat& r) const { return compare(r) == 0; }

    std::complex<double> to_complex() const;
    double to_double() const;  // requires is_real()

    std::string str() const;

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }
    unsigned k() const { return k_; }

  private:
    void reduce();

    BigInt a_{0}, b_{0}, c_{0}, d_{0};
    unsigned k_ = 0;
};

}  // namespace qnc

#endif  // QNC_CYCLOTOMIC_HPP_
