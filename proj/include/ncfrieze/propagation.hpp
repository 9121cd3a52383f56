#pragma once

#include <utility>

#include "ncfrieze/frieze.hpp"
#include "ncfrieze/matrix.hpp"

namespace ncfrieze {

// The 2x2 propagation matrix [[0, -e^-1 d], [1, f^-1 c]] with its generating
// tuple; e and f must be invertible.
struct MuMatrix {
    RingMatrix matrix;
    RingValue c, d, e, f;
};

MuMatrix mu(const RingValue& c, const RingValue& d, const RingValue& e, const RingValue& f);

// The mu factor at vertex r of a frieze: mu(c_{r-1,r+1}, c_{r,r+1}, c_{r,r-1}, c_{r-1,r}).
MuMatrix mu_at(const Frieze& f, long r);

// Row propagation: (c_{i,j-1}, c_{i,j}) * mu_at(j) = (c_{i,j}, c_{i,j+1}),
// valid for j in [i, i+m] through the extended entries. Returns the rederived
// pair; on a valid frieze it equals the stored entries.
std::pair<RingValue, RingValue> propagate_row(const Frieze& f, long i, long j);

// Column propagation:
// [[0, 1], [-c_{i+1,i} c_{i-1,i}^-1, c_{i+1,i-1} c_{i,i-1}^-1]] (c_{i-1,k}, c_{i,k})^T
//   = (c_{i,k}, c_{i+1,k})^T.
std::pair<RingValue, RingValue> propagate_col(const Frieze& f, long i, long k);

// Product of mu factors for r = i..j (i <= j). On a valid frieze equals
// [[-c_{i,i-1}^-1 c_{i,j},  -c_{i,i-1}^-1 c_{i,j+1}],
//  [ c_{i-1,i}^-1 c_{i-1,j}, c_{i-1,i}^-1 c_{i-1,j+1}]]
// with extended entries on the right.
RingMatrix product_M(const Frieze& f, long i, long j);

// Full-period product, r = 1..m; equals -id exactly for every frieze.
RingMatrix monodromy(const Frieze& f);

// Rebuilds a frieze from boundary + second-diagonal data: row i is seeded
// with (d_i, q_i) and propagated with mu(q_{j-1}, d_j, d'_{j-1}, d_{j-1});
// the two steps past the last entry must produce 0 and then -d_i (the row
// closure), else ClosureViolation. The assembled table must pass verify_local,
// else LocalRelationViolation.
Frieze complete(const std::vector<RingValue>& boundary_fwd,
                const std::vector<RingValue>& boundary_bwd,
                const std::vector<RingValue>& quiddity, const RingDescriptor& ring);

}  // namespace ncfrieze
