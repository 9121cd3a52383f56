#include "ncfrieze/quaternion.hpp"

#include <sstream>

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {
        x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
        x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
        x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
        x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a,
    };
}

Quaternion quaternion_inverse(const Quaternion& x) {
    Rational n = x.norm();
    if (n == 0) throw NotInvertible("zero quaternion has no inverse");
    Quaternion conj = x.conjugate();
    return {conj.a / n, conj.b / n, conj.c / n, conj.d / n};
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Rational& coeff, const char* unit) {
    if (coeff == 0) return;
    Rational abs = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
        if (coeff < 0) out << "-";
        first = false;
    } else {
        out << (coeff < 0 ? " - " : " + ");
    }
    if (*unit == '\0') {
        out << rational_to_string(abs);
    } else if (abs == 1) {
        out << unit;
    } else {
        out << rational_to_string(abs) << "*" << unit;
    }
}

}  // namespace

std::string quaternion_to_string(const Quaternion& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    append_term(out, first, x.a, "");
    append_term(out, first, x.b, "i");
    append_term(out, first, x.c, "j");
    append_term(out, first, x.d, "k");
    return out.str();
}

}  // namespace ncfrieze
