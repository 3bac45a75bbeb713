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

#include "qnc/cyclotomic.hpp"

#include <cmath>
#include <sstream>

#include "qnc/error.hpp"

namespace qnc {

namespace {

// Numerator map for multiplication by sqrt(2) = w - w^3.
void mul_sqrt2(BigInt& a, BigInt& b, BigInt& c, BigInt& d) {
    BigInt na = b - d;
    BigInt nb = a + c;
    BigInt nc = b + d;
    BigInt nd = c - a;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
}

bool divisible_by_sqrt2(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return (a - c) % 2 == 0 && (b - d) % 2 == 0;
}

// Inverse of mul_sqrt2; caller checks divisibility.
void div_sqrt2(BigInt& a, BigInt& b, BigInt& c, BigInt& d) {
    BigInt na = (b - d) / 2;
    BigInt nb = (a + c) / 2;
    BigInt nc = (b + d) / 2;
    BigInt nd = (c - a) / 2;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
}

}  // namespace

void Cyclo::reduce() {
    if (a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && divisible_by_sqrt2(a_, b_, c_, d_)) {
        div_sqrt2(a_, b_, c_, d_);
        --k_;
    }
}

Cyclo Cyclo::integer(long v) {
    Cyclo x;
    x.a_ = v;
    return x;
}

Cyclo Cyclo::from_parts(BigInt a, BigInt b, BigInt c, BigInt d, unsigned k) {
    Cyclo x;
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    x.c_ = std::move(c);
    x.d_ = std::move(d);
    x.k_ = k;
    x.reduce();
    return x;
}

Cyclo Cyclo::omega_pow(int p, unsigned k) {
    p = ((p % 8) + 8) % 8;
    int sign = 1;
    if (p >= 4) {
        p -= 4;
        sign = -1;
    }
    BigInt coeff[4] = {0, 0, 0, 0};
    coeff[p] = sign;
    return from_parts(coeff[0], coeff[1], coeff[2], coeff[3], k);
}

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    x.c_ = -x.c_;
    x.d_ = -x.d_;
    return x;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
    Cyclo r = rhs;
    while (k_ < r.k_) {
        mul_sqrt2(a_, b_, c_, d_);
        ++k_;
    }
    while (r.k_ < k_) {
        mul_sqrt2(r.a_, r.b_, r.c_, r.d_);
        ++r.k_;
    }
    a_ += r.a_;
    b_ += r.b_;
    c_ += r.c_;
    d_ += r.d_;
    reduce();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
    return *this += -rhs;
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
    // Convolution over w powers with w^4 = -1.
    const BigInt* x[4] = {&a_, &b_, &c_, &d_};
    const BigInt* y[4] = {&rhs.a_, &rhs.b_, &rhs.c_, &rhs.d_};
    BigInt out[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        if (*x[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (*y[j] == 0) continue;
            const int p = i + j;
            if (p < 4)
                out[p] += *x[i] * *y[j];
            else
                out[p - 4] -= *x[i] * *y[j];
        }
    }
    a_ = std::move(out[0]);
    b_ = std::move(out[1]);
    c_ = std::move(out[2]);
    d_ = std::move(out[3]);
    k_ += rhs.k_;
    reduce();
    return *this;
}

Cyclo Cyclo::conj() const {
    Cyclo x;
    x.a_ = a_;
    x.b_ = -d_;
    x.c_ = -c_;
    x.d_ = -b_;
    x.k_ = k_;
    x.reduce();
    return x;
}

Cyclo Cyclo::abs_sq() const {
    return *this * conj();
}

bool Cyclo::is_zero() const {
    return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0;
}

bool Cyclo::is_real() const {
    return c_ == 0 && d_ == -b_;
}

bool Cyclo::is_one() const {
    return k_ == 0 && a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0;
}

int Cyclo::compare(const BigRat& r) const {
    if (!is_real()) throw Error("Cyclo::compare on a non-real value " + str());
    // Value = (a + b*sqrt2)/sqrt2^k. Normalize the denominator to a power of 2.
    BigInt u = a_, v = b_;
    unsigned k = k_;
    if (k % 2 == 1) {
        // Multiply numerator and denominator by sqrt2.
        BigInt nu = 2 * v;
        v = u;
        u = std::move(nu);
        ++k;
    }
    const unsigned j = k / 2;
    // Compare (u + v*sqrt2)/2^j against p/q: sign of A + B*sqrt2 with
    // A = u*q - p*2^j, B = v*q. A + B*sqrt2 = 0 only when A = B = 0.
    const BigInt p = numerator(r);
    const BigInt q = denominator(r);  // cpp_rational keeps q > 0
    BigInt A = u * q - p * (BigInt(1) << j);
    BigInt B = v * q;
    if (A == 0 && B == 0) return 0;
    if (A >= 0 && B >= 0) return 1;
    if (A <= 0 && B <= 0) return -1;
    // Opposite signs: compare A^2 against 2B^2 (equality impossible, sqrt2 irrational).
    if (A > 0)
        return A * A > 2 * B * B ? 1 : -1;
    return 2 * B * B > A * A ? 1 : -1;
}

std::complex<double> Cyclo::to_complex() const {
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double re = a_.convert_to<double>() + (b_ - d_).convert_to<double>() * inv_sqrt2;
    const double im = c_.convert_to<double>() + (b_ + d_).convert_to<double>() * inv_sqrt2;
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(k_));
    return {re * scale, im * scale};
}

double Cyclo::to_double() const {
    if (!is_real()) throw Error("Cyclo::to_double on a non-real value " + str());
    return to_complex().real();
}

std::string Cyclo::str() const {
    std::ostringstream out;
    out << '(' << a_ << " + " << b_ << "w + " << c_ << "w^2 + " << d_ << "w^3)/sqrt2^" << k_;
    return out.str();
}

}  // namespace qnc
