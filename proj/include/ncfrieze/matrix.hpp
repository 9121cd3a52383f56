#pragma once

#include "ncfrieze/ring.hpp"

namespace ncfrieze {

RingMatrix mat_identity(int dim, const RingDescriptor& element_ring);
RingMatrix mat_neg_identity(int dim, const RingDescriptor& element_ring);

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_neg(const RingMatrix& a);
bool mat_eq(const RingMatrix& a, const RingMatrix& b);

// Noncommutative 2x2 inverse. Uses the closed formula
//   [[-c^-1 d (b - a c^-1 d)^-1, -a^-1 b (d - c a^-1 b)^-1],
//    [(b - a c^-1 d)^-1,          (d - c a^-1 b)^-1]]
// when a, c and both parenthesized differences are invertible, and falls back
// to exact elimination otherwise (the formula cannot handle e.g. the identity
// matrix, whose c = 0). Throws NotInvertible naming the failing subexpression.
RingMatrix invert_2x2(const RingMatrix& a);

// Exact Gaussian elimination with invertible-pivot search, left row operations
// only (sound over noncommutative rings). Complete over division-ring entries;
// over matrix-ring entries it may fail to find a pivot and then reports
// NotInvertible.
RingMatrix invert_matrix(const RingMatrix& a);

bool matrix_is_invertible(const RingMatrix& a);

std::string matrix_to_string(const RingMatrix& a);

}  // namespace ncfrieze
