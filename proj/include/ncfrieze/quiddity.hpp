#pragma once

#include <optional>

#include "ncfrieze/propagation.hpp"

namespace ncfrieze {

// Boundary data (d_i = boundary_fwd, d_i' = boundary_bwd) with diagonal data
// (c_i = quiddity); a quiddity cycle when its mu product is -id. Boundary
// values are invertible; quiddity values are arbitrary (the m=2 family has 0).
struct QuiddityCycle {
    RingDescriptor ring;
    int m = 0;
    std::vector<RingValue> boundary_fwd;
    std::vector<RingValue> boundary_bwd;
    std::vector<RingValue> quiddity;
    // Set by reduce_at: where the cut happened and the length before it.
    std::optional<int> cut_index;
    std::optional<int> parent_m;
};

// Validates lengths and boundary invertibility.
QuiddityCycle make_quiddity_cycle(RingDescriptor ring, std::vector<RingValue> boundary_fwd,
                                  std::vector<RingValue> boundary_bwd,
                                  std::vector<RingValue> quiddity);

// mu(c_0, d_1, d_0', d_0) mu(c_1, d_2, d_1', d_1) ... mu(c_{m-1}, d_0, d_{m-1}', d_{m-1}).
RingMatrix cycle_product(const QuiddityCycle& cycle);

// True iff the product is exactly -id. Always false for m = 1 (the top-left
// entry of a single mu factor is 0).
bool verify_cycle(const QuiddityCycle& cycle);

// d_i = c_{i,i+1}, d_i' = c_{i+1,i}, c_i = c_{i,i+2}; satisfies
// verify_cycle(extract(f)) and complete(extract(f)) == f on valid friezes.
QuiddityCycle extract(const Frieze& f);

Frieze complete(const QuiddityCycle& cycle);

// The m=3 family: requires d_2 (d_0')^-1 d_1 = d_1' d_0^-1 d_2' exactly
// (ConstraintViolated otherwise) and sets c = (d_2', d_0', d_1').
QuiddityCycle m3_family(const std::vector<RingValue>& boundary_fwd,
                        const std::vector<RingValue>& boundary_bwd);

// Replaces the three consecutive mu factors at positions r-1, r, r+1 by the
// two-factor product
//   mu(-d_{r-1} (d_r')^-1 d_{r+1} + c_{r-1} d_r^-1 c_r,  c_r,  d_{r-1}', d_{r-1})
//   mu(-d_r (d_{r+1}')^-1 d_{r+2} + c_r d_{r+1}^-1 c_{r+1},  d_{r+2},
//      d_{r+1}' d_r^-1 c_r d_{r+1}^-1 d_r',  c_r)
// (equal as matrix products), yielding a cycle of length m-1. Requires c_r
// invertible: it lands in the e/f slots of the replacement factors. Surviving
// factors are re-indexed 0..m-2 in cyclic order from old position 0.
QuiddityCycle reduce_at(const QuiddityCycle& cycle, long r);

}  // namespace ncfrieze
