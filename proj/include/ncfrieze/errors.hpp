#pragma once

#include <stdexcept>
#include <string>

namespace ncfrieze {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different rings.
struct DescriptorMismatch : Error {
    using Error::Error;
};

// Matrix shapes do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A required inverse does not exist (zero quaternion, singular matrix, zero
// rational, or a free-ring value, which is never inverted at ring level).
struct NotInvertible : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position(position) {}
    std::size_t position;
};

struct UnknownSymbol : Error {
    using Error::Error;
};

struct UnboundSymbol : Error {
    using Error::Error;
};

// A randomized procedure ran out of resampling attempts.
struct RetriesExhausted : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

// A completion seed fails the row closure condition (it is not a quiddity cycle).
struct ClosureViolation : Error {
    using Error::Error;
};

// A completed table fails its own local relations.
struct LocalRelationViolation : Error {
    using Error::Error;
};

struct ConstraintViolated : Error {
    using Error::Error;
};

// Malformed input file.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace ncfrieze
