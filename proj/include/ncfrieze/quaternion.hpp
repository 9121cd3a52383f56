#pragma once

#include <string>

#include "ncfrieze/rational.hpp"

namespace ncfrieze {

// Quaternion with rational coefficients: a + b*i + c*j + d*k, with
// i^2 = j^2 = k^2 = -1, i*j = k, j*k = i, k*i = j and anticommutators negated.
struct Quaternion {
    Rational a, b, c, d;

    Quaternion() : a(0), b(0), c(0), d(0) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : a(std::move(a)), b(std::move(b)), c(std::move(c)), d(std::move(d)) {}

    static Quaternion from_scalar(const Rational& r) { return {r, 0, 0, 0}; }
    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool operator==(const Quaternion& other) const = default;
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    Quaternion conjugate() const { return {a, -b, -c, -d}; }
    Rational norm() const { return a * a + b * b + c * c + d * d; }
};

Quaternion operator+(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x);
Quaternion operator*(const Quaternion& x, const Quaternion& y);

// conjugate / norm; throws NotInvertible on zero.
Quaternion quaternion_inverse(const Quaternion& x);

// Canonical rendering: coefficient order 1, i, j, k, zero terms omitted,
// e.g. "-2*i - j", "1 - k", "0". Parses back under the expression grammar.
std::string quaternion_to_string(const Quaternion& x);

}  // namespace ncfrieze
