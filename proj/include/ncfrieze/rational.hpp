#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncfrieze {

// Arbitrary-precision rational. mpq_class keeps values canonical (reduced,
// positive denominator) under arithmetic; every construction from raw parts
// must go through rational_from_* below, which canonicalize.
using Rational = mpq_class;

Rational rational_from_long(long value);
Rational rational_from_parts(const mpz_class& numerator, const mpz_class& denominator);

// Accepts "p" or "p/q" with an optional leading '-'. Throws FormatError on
// anything else (including q = 0).
Rational rational_from_string(std::string_view text);

std::string rational_to_string(const Rational& value);

}  // namespace ncfrieze
