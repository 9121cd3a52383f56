#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ncfrieze/quaternion.hpp"
#include "ncfrieze/rational.hpp"
#include "ncfrieze/rng.hpp"

namespace ncfrieze {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class RingKind { rational, quaternion, matrix, free_skew };

// Which exact ring a value lives in. Values of different descriptors never mix.
struct RingDescriptor {
    RingKind kind = RingKind::rational;
    int dim = 0;                     // matrix only
    std::vector<std::string> vars;   // free_skew only, nonempty and distinct

    static RingDescriptor rational() { return {RingKind::rational, 0, {}}; }
    static RingDescriptor quaternion() { return {RingKind::quaternion, 0, {}}; }
    static RingDescriptor matrix(int dim);
    static RingDescriptor free_skew(std::vector<std::string> vars);

    bool operator==(const RingDescriptor&) const = default;
    std::string name() const;
};

struct RingMatrix;
struct RingValue;

// Rectangular matrix of ring values sharing one descriptor. Doubles as the
// matrix-backend element (rational entries) and as the generic container for
// mu-matrices and quasideterminant inputs over any backend.
struct RingMatrix {
    int rows = 0;
    int cols = 0;
    RingDescriptor element_ring;
    std::vector<RingValue> data;  // row-major

    RingMatrix() = default;
    RingMatrix(int rows, int cols, RingDescriptor element_ring, std::vector<RingValue> data);

    const RingValue& at(int r, int c) const;
    RingValue& at(int r, int c);
};

// Immutable element of one of the supported rings. The free backend holds an
// unevaluated expression; everything else is stored normalized so structural
// equality is mathematical equality.
struct RingValue {
    RingDescriptor ring;
    std::variant<Rational, Quaternion, std::shared_ptr<const RingMatrix>, ExprPtr> payload;

    const Rational& as_rational() const { return std::get<Rational>(payload); }
    const Quaternion& as_quaternion() const { return std::get<Quaternion>(payload); }
    const RingMatrix& as_matrix() const { return *std::get<std::shared_ptr<const RingMatrix>>(payload); }
    const ExprPtr& as_expr() const { return std::get<ExprPtr>(payload); }
};

RingValue make_rational_value(Rational q);
RingValue make_quaternion_value(Quaternion q);
RingValue make_matrix_value(RingMatrix m);  // matrix-backend element; entries must be rational
RingValue make_free_value(RingDescriptor ring, ExprPtr expr);

RingValue ring_zero(const RingDescriptor& ring);
RingValue ring_one(const RingDescriptor& ring);

RingValue add(const RingValue& x, const RingValue& y);
RingValue sub(const RingValue& x, const RingValue& y);
RingValue neg(const RingValue& x);
RingValue mul(const RingValue& x, const RingValue& y);

// Structural equality after normalization; free backend delegates to the
// expression module's randomized identity tester (probabilistic, one-sided).
bool eq(const RingValue& x, const RingValue& y);
bool is_zero(const RingValue& x);

// Exact two-sided inverse. Quaternions via conjugate/norm, matrix backend via
// exact elimination. Free values are not inverted here; wrap them in a power
// expression instead (see expr module).
RingValue invert(const RingValue& x);
bool is_invertible(const RingValue& x);

RingValue scalar_embed(const Rational& q, const RingDescriptor& ring);

std::string value_to_string(const RingValue& x);

// Sampling used by the fan generator and the law tests. Coefficients are
// integers in [-max_coeff, max_coeff]; coordinate order is documented in the
// README (quaternion a,b,c,d; matrices row-major).
RingValue sample_value(const RingDescriptor& ring, SplitMix64& rng, long max_coeff);
RingValue sample_invertible(const RingDescriptor& ring, SplitMix64& rng, long max_coeff);

}  // namespace ncfrieze
