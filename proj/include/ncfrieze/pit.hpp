#pragma once

#include <cstdint>

#include "ncfrieze/expr.hpp"
#include "ncfrieze/matrix.hpp"

namespace ncfrieze {

// Defaults distinguish all of the degree-<=5 identities that occur here
// reliably; see README for the one-sided guarantee.
struct PitOptions {
    int trials = 5;
    int dim = 3;
    std::uint64_t seed = 1;
    long entry_min = -9;
    long entry_max = 9;
    int trial_retries = 32;
};

// Random invertible dim x dim rational matrix, entries uniform integers in
// [entry_min, entry_max], resampled until invertible.
RingValue random_invertible_matrix(int dim, SplitMix64& rng, long entry_min, long entry_max);

// Polynomial identity testing over the free skew field: substitutes random
// invertible rational matrices for every symbol and compares exactly. False
// only on a genuine counterexample binding; true is high confidence, not
// proof. Trials draw independent streams from the seed; a trial whose
// required inverse fails is resampled (bounded, then RetriesExhausted).
bool pit_equal(const Expr& lhs, const Expr& rhs, const PitOptions& options = {});
bool pit_equal(const ExprPtr& lhs, const ExprPtr& rhs, const PitOptions& options = {});
bool pit_equal(const Expr& lhs, const Expr& rhs, int trials, int dim, std::uint64_t seed);

}  // namespace ncfrieze
