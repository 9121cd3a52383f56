#include "ncfrieze/matrix.hpp"

#include <sstream>

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

namespace {

void require_same_element_ring(const RingMatrix& a, const RingMatrix& b, const char* op) {
    if (!(a.element_ring == b.element_ring))
        throw DescriptorMismatch(std::string(op) + ": matrices over different rings");
}

}  // namespace

RingMatrix mat_identity(int dim, const RingDescriptor& element_ring) {
    std::vector<RingValue> data;
    data.reserve(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            data.push_back(r == c ? ring_one(element_ring) : ring_zero(element_ring));
    return RingMatrix(dim, dim, element_ring, std::move(data));
}

RingMatrix mat_neg_identity(int dim, const RingDescriptor& element_ring) {
    RingMatrix m = mat_identity(dim, element_ring);
    for (int r = 0; r < dim; ++r) m.at(r, r) = neg(m.at(r, r));
    return m;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    require_same_element_ring(a, b, "mat_mul");
    if (a.cols != b.rows) throw DimensionMismatch("mat_mul: inner dimensions disagree");
    std::vector<RingValue> data;
    data.reserve(static_cast<std::size_t>(a.rows) * b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < b.cols; ++c) {
            RingValue acc = mul(a.at(r, 0), b.at(0, c));
            for (int k = 1; k < a.cols; ++k) acc = add(acc, mul(a.at(r, k), b.at(k, c)));
            data.push_back(std::move(acc));
        }
    }
    return RingMatrix(a.rows, b.cols, a.element_ring, std::move(data));
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
    require_same_element_ring(a, b, "mat_add");
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("mat_add: shapes disagree");
    std::vector<RingValue> data;
    data.reserve(a.data.size());
    for (std::size_t n = 0; n < a.data.size(); ++n) data.push_back(add(a.data[n], b.data[n]));
    return RingMatrix(a.rows, a.cols, a.element_ring, std::move(data));
}

RingMatrix mat_neg(const RingMatrix& a) {
    std::vector<RingValue> data;
    data.reserve(a.data.size());
    for (const RingValue& v : a.data) data.push_back(neg(v));
    return RingMatrix(a.rows, a.cols, a.element_ring, std::move(data));
}

bool mat_eq(const RingMatrix& a, const RingMatrix& b) {
    require_same_element_ring(a, b, "mat_eq");
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t n = 0; n < a.data.size(); ++n)
        if (!eq(a.data[n], b.data[n])) return false;
    return true;
}

RingMatrix invert_matrix(const RingMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("only square matrices can be inverted");
    const int n = a.rows;
    // Work on [A | I]; all row operations are left multiplications, so the
    // right half accumulates a left inverse of A.
    std::vector<std::vector<RingValue>> work;
    work.reserve(n);
    for (int r = 0; r < n; ++r) {
        std::vector<RingValue> row;
        row.reserve(2 * n);
        for (int c = 0; c < n; ++c) row.push_back(a.at(r, c));
        for (int c = 0; c < n; ++c)
            row.push_back(r == c ? ring_one(a.element_ring) : ring_zero(a.element_ring));
        work.push_back(std::move(row));
    }
    for (int p = 0; p < n; ++p) {
        int pivot_row = -1;
        for (int r = p; r < n; ++r) {
            if (is_invertible(work[r][p])) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0)
            throw NotInvertible("no invertible pivot in column " + std::to_string(p));
        std::swap(work[p], work[pivot_row]);
        RingValue pivot_inverse = invert(work[p][p]);
        for (int c = 0; c < 2 * n; ++c) work[p][c] = mul(pivot_inverse, work[p][c]);
        for (int r = 0; r < n; ++r) {
            if (r == p || is_zero(work[r][p])) continue;
            RingValue factor = work[r][p];
            for (int c = 0; c < 2 * n; ++c) work[r][c] = sub(work[r][c], mul(factor, work[p][c]));
        }
    }
    std::vector<RingValue> data;
    data.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) data.push_back(work[r][n + c]);
    RingMatrix inverse(n, n, a.element_ring, std::move(data));
    // Elimination certifies a left inverse; demand two-sidedness.
    if (!mat_eq(mat_mul(a, inverse), mat_identity(n, a.element_ring)))
        throw NotInvertible("matrix has a left inverse but no two-sided inverse");
    return inverse;
}

bool matrix_is_invertible(const RingMatrix& a) {
    if (a.rows != a.cols) return false;
    try {
        invert_matrix(a);
        return true;
    } catch (const NotInvertible&) {
        return false;
    }
}

RingMatrix invert_2x2(const RingMatrix& m) {
    if (m.rows != 2 || m.cols != 2) throw DimensionMismatch("invert_2x2 needs a 2x2 matrix");
    const RingValue &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
    if (is_invertible(a) && is_invertible(c)) {
        RingValue a_inv = invert(a);
        RingValue c_inv = invert(c);
        RingValue top = sub(b, mul(mul(a, c_inv), d));    // b - a c^-1 d
        RingValue bottom = sub(d, mul(mul(c, a_inv), b));  // d - c a^-1 b
        if (is_invertible(top) && is_invertible(bottom)) {
            RingValue top_inv = invert(top);
            RingValue bottom_inv = invert(bottom);
            std::vector<RingValue> data{
                neg(mul(mul(c_inv, d), top_inv)),
                neg(mul(mul(a_inv, b), bottom_inv)),
                top_inv,
                bottom_inv,
            };
            return RingMatrix(2, 2, m.element_ring, std::move(data));
        }
    }
    try {
        return invert_matrix(m);
    } catch (const NotInvertible& e) {
        throw NotInvertible(std::string("invert_2x2: closed formula inapplicable and elimination failed: ") +
                            e.what());
    }
}

std::string matrix_to_string(const RingMatrix& a) {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < a.rows; ++r) {
        out << (r ? ", [" : "[");
        for (int c = 0; c < a.cols; ++c) out << (c ? ", " : "") << value_to_string(a.at(r, c));
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace ncfrieze
