#include "ncfrieze/ring.hpp"

#include <set>
#include <sstream>

#include "ncfrieze/errors.hpp"
#include "ncfrieze/expr.hpp"
#include "ncfrieze/matrix.hpp"
#include "ncfrieze/pit.hpp"

namespace ncfrieze {

namespace {

// Fixed stream for ring-level equality of free values; callers needing seed
// control use pit_equal directly.
constexpr std::uint64_t kFreeEqSeed = 0xa11ce;

void require_same_ring(const RingValue& x, const RingValue& y, const char* op) {
    if (!(x.ring == y.ring)) {
        throw DescriptorMismatch(std::string(op) + ": operands live in " + x.ring.name() + " and " +
                                 y.ring.name());
    }
}

}  // namespace

RingDescriptor RingDescriptor::matrix(int dim) {
    if (dim < 1) throw FormatError("matrix ring dimension must be >= 1");
    RingDescriptor d;
    d.kind = RingKind::matrix;
    d.dim = dim;
    return d;
}

RingDescriptor RingDescriptor::free_skew(std::vector<std::string> vars) {
    if (vars.empty()) throw FormatError("free ring needs at least one variable");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw FormatError("free ring variables must be distinct");
    RingDescriptor d;
    d.kind = RingKind::free_skew;
    d.vars = std::move(vars);
    return d;
}

std::string RingDescriptor::name() const {
    switch (kind) {
        case RingKind::rational: return "rational";
        case RingKind::quaternion: return "quaternion";
        case RingKind::matrix: return "matrix(" + std::to_string(dim) + ")";
        case RingKind::free_skew: {
            std::string s = "free(";
            for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
            return s + ")";
        }
    }
    return "?";
}

RingMatrix::RingMatrix(int rows, int cols, RingDescriptor element_ring, std::vector<RingValue> data)
    : rows(rows), cols(cols), element_ring(std::move(element_ring)), data(std::move(data)) {
    if (rows < 1 || cols < 1 || this->data.size() != static_cast<std::size_t>(rows) * cols)
        throw DimensionMismatch("matrix shape does not match entry count");
    for (const RingValue& v : this->data)
        if (!(v.ring == this->element_ring))
            throw DescriptorMismatch("matrix entry ring differs from the matrix element ring");
}

const RingValue& RingMatrix::at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
}

RingValue& RingMatrix::at(int r, int c) {
    return data[static_cast<std::size_t>(r) * cols + c];
}

RingValue make_rational_value(Rational q) {
    return {RingDescriptor::rational(), std::move(q)};
}

RingValue make_quaternion_value(Quaternion q) {
    return {RingDescriptor::quaternion(), std::move(q)};
}

RingValue make_matrix_value(RingMatrix m) {
    if (m.rows != m.cols) throw DimensionMismatch("matrix-ring elements are square");
    if (!(m.element_ring == RingDescriptor::rational()))
        throw DescriptorMismatch("matrix-ring elements have rational entries");
    int dim = m.rows;
    return {RingDescriptor::matrix(dim), std::make_shared<const RingMatrix>(std::move(m))};
}

RingValue make_free_value(RingDescriptor ring, ExprPtr expr) {
    if (ring.kind != RingKind::free_skew) throw DescriptorMismatch("expression payload needs a free ring");
    return {std::move(ring), std::move(expr)};
}

RingValue ring_zero(const RingDescriptor& ring) { return scalar_embed(Rational(0), ring); }
RingValue ring_one(const RingDescriptor& ring) { return scalar_embed(Rational(1), ring); }

RingValue scalar_embed(const Rational& q, const RingDescriptor& ring) {
    switch (ring.kind) {
        case RingKind::rational: return make_rational_value(q);
        case RingKind::quaternion: return make_quaternion_value(Quaternion::from_scalar(q));
        case RingKind::matrix: {
            RingMatrix m = mat_identity(ring.dim, RingDescriptor::rational());
            for (int r = 0; r < ring.dim; ++r) m.at(r, r) = make_rational_value(q);
            return {ring, std::make_shared<const RingMatrix>(std::move(m))};
        }
        case RingKind::free_skew: return {ring, make_scalar(q)};
    }
    throw Error("unreachable ring kind");
}

RingValue add(const RingValue& x, const RingValue& y) {
    require_same_ring(x, y, "add");
    switch (x.ring.kind) {
        case RingKind::rational: return make_rational_value(x.as_rational() + y.as_rational());
        case RingKind::quaternion: return make_quaternion_value(x.as_quaternion() + y.as_quaternion());
        case RingKind::matrix:
            return {x.ring, std::make_shared<const RingMatrix>(mat_add(x.as_matrix(), y.as_matrix()))};
        case RingKind::free_skew: return {x.ring, make_sum({x.as_expr(), y.as_expr()})};
    }
    throw Error("unreachable ring kind");
}

RingValue neg(const RingValue& x) {
    switch (x.ring.kind) {
        case RingKind::rational: return make_rational_value(-x.as_rational());
        case RingKind::quaternion: return make_quaternion_value(-x.as_quaternion());
        case RingKind::matrix:
            return {x.ring, std::make_shared<const RingMatrix>(mat_neg(x.as_matrix()))};
        case RingKind::free_skew: return {x.ring, expr_neg(x.as_expr())};
    }
    throw Error("unreachable ring kind");
}

RingValue sub(const RingValue& x, const RingValue& y) { return add(x, neg(y)); }

RingValue mul(const RingValue& x, const RingValue& y) {
    require_same_ring(x, y, "mul");
    switch (x.ring.kind) {
        case RingKind::rational: return make_rational_value(x.as_rational() * y.as_rational());
        case RingKind::quaternion: return make_quaternion_value(x.as_quaternion() * y.as_quaternion());
        case RingKind::matrix:
            return {x.ring, std::make_shared<const RingMatrix>(mat_mul(x.as_matrix(), y.as_matrix()))};
        case RingKind::free_skew: return {x.ring, make_product({x.as_expr(), y.as_expr()})};
    }
    throw Error("unreachable ring kind");
}

bool eq(const RingValue& x, const RingValue& y) {
    require_same_ring(x, y, "eq");
    switch (x.ring.kind) {
        case RingKind::rational: return x.as_rational() == y.as_rational();
        case RingKind::quaternion: return x.as_quaternion() == y.as_quaternion();
        case RingKind::matrix: return mat_eq(x.as_matrix(), y.as_matrix());
        case RingKind::free_skew: {
            PitOptions options;
            options.seed = kFreeEqSeed;
            return pit_equal(x.as_expr(), y.as_expr(), options);
        }
    }
    throw Error("unreachable ring kind");
}

bool is_zero(const RingValue& x) { return eq(x, ring_zero(x.ring)); }

RingValue invert(const RingValue& x) {
    switch (x.ring.kind) {
        case RingKind::rational: {
            if (x.as_rational() == 0) throw NotInvertible("rational 0 has no inverse");
            return make_rational_value(1 / x.as_rational());
        }
        case RingKind::quaternion: return make_quaternion_value(quaternion_inverse(x.as_quaternion()));
        case RingKind::matrix:
            return {x.ring, std::make_shared<const RingMatrix>(invert_matrix(x.as_matrix()))};
        case RingKind::free_skew:
            throw NotInvertible(
                "free-ring values are not inverted at ring level; use a power expression "
                "and the identity tester");
    }
    throw Error("unreachable ring kind");
}

bool is_invertible(const RingValue& x) {
    switch (x.ring.kind) {
        case RingKind::rational: return x.as_rational() != 0;
        case RingKind::quaternion: return !x.as_quaternion().is_zero();
        case RingKind::matrix: return matrix_is_invertible(x.as_matrix());
        case RingKind::free_skew: return true;  // deferred to randomized spot checks
    }
    throw Error("unreachable ring kind");
}

std::string value_to_string(const RingValue& x) {
    switch (x.ring.kind) {
        case RingKind::rational: return rational_to_string(x.as_rational());
        case RingKind::quaternion: return quaternion_to_string(x.as_quaternion());
        case RingKind::matrix: return matrix_to_string(x.as_matrix());
        case RingKind::free_skew: return render_expr(x.as_expr());
    }
    throw Error("unreachable ring kind");
}

RingValue sample_value(const RingDescriptor& ring, SplitMix64& rng, long max_coeff) {
    switch (ring.kind) {
        case RingKind::rational:
            return make_rational_value(Rational(rng.uniform(-max_coeff, max_coeff)));
        case RingKind::quaternion: {
            Rational a(rng.uniform(-max_coeff, max_coeff)), b(rng.uniform(-max_coeff, max_coeff)),
                c(rng.uniform(-max_coeff, max_coeff)), d(rng.uniform(-max_coeff, max_coeff));
            return make_quaternion_value(Quaternion(a, b, c, d));
        }
        case RingKind::matrix: {
            std::vector<RingValue> data;
            data.reserve(static_cast<std::size_t>(ring.dim) * ring.dim);
            for (int n = 0; n < ring.dim * ring.dim; ++n)
                data.push_back(make_rational_value(Rational(rng.uniform(-max_coeff, max_coeff))));
            return {ring, std::make_shared<const RingMatrix>(
                              RingMatrix(ring.dim, ring.dim, RingDescriptor::rational(), std::move(data)))};
        }
        case RingKind::free_skew:
            throw Error("sampling free-ring values is not supported");
    }
    throw Error("unreachable ring kind");
}

RingValue sample_invertible(const RingDescriptor& ring, SplitMix64& rng, long max_coeff) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        RingValue v = sample_value(ring, rng, max_coeff);
        if (is_invertible(v)) return v;
    }
    throw RetriesExhausted("could not sample an invertible " + ring.name() + " value");
}

}  // namespace ncfrieze
