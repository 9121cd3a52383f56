#include "ncfrieze/rational.hpp"

#include <cctype>

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

Rational rational_from_long(long value) { return Rational(value); }

Rational rational_from_parts(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw FormatError("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational rational_from_string(std::string_view text) {
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) -> mpz_class {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_start) throw FormatError("expected integer in rational: '" + std::string(text) + "'");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    };
    mpz_class num = read_int(true);
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
    }
    if (pos != text.size()) throw FormatError("trailing characters in rational: '" + std::string(text) + "'");
    return rational_from_parts(num, den);
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

}  // namespace ncfrieze
