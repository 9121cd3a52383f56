#pragma once

#include "ncfrieze/frieze.hpp"
#include "ncfrieze/matrix.hpp"

namespace ncfrieze {

struct SubmatrixNotInvertible : NotInvertible {
    using NotInvertible::NotInvertible;
};

// |A|_{i,j} = a_{i,j} - r_i^j (A^{i,j})^-1 c_j^i with 1-based position (i,j);
// r_i^j is row i without column j, c_j^i is column j without row i. 2x2
// submatrices are inverted through invert_2x2. Throws SubmatrixNotInvertible
// when A^{i,j} has no inverse.
RingValue quasidet(const RingMatrix& a, int i, int j);

// Rows i..i+2, columns j-1..j+1, extended entries on wraparound; defined for
// j - i in [2, m].
RingMatrix neighbouring_submatrix(const Frieze& f, long i, long j);

// Checks |M|_{3,3} = 0 for every neighbouring 3x3 window (m(m-1) of them).
// Windows where the extended-pattern reading differs from a naive modular one
// (those containing a signed flank entry) are counted in the notes.
VerificationReport tame_scan(const Frieze& f);

// The pair s = -c_{j,j-1}^-1 c_{j,j+1}, t = c_{j-1,j}^-1 c_{j-1,j+1} with
// column_3 = column_1 * s + column_2 * t in the window at (i, j).
std::pair<RingValue, RingValue> dependence_witness(const Frieze& f, long i, long j);

}  // namespace ncfrieze
