#include "ncfrieze/pit.hpp"

#include <set>

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

RingValue random_invertible_matrix(int dim, SplitMix64& rng, long entry_min, long entry_max) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<RingValue> data;
        data.reserve(static_cast<std::size_t>(dim) * dim);
        for (int n = 0; n < dim * dim; ++n)
            data.push_back(make_rational_value(Rational(rng.uniform(entry_min, entry_max))));
        RingMatrix m(dim, dim, RingDescriptor::rational(), std::move(data));
        if (matrix_is_invertible(m)) return make_matrix_value(std::move(m));
    }
    throw RetriesExhausted("could not sample an invertible random matrix");
}

bool pit_equal(const Expr& lhs, const Expr& rhs, const PitOptions& options) {
    std::set<std::string> symbols;
    for (const std::string& s : expr_symbols(lhs)) symbols.insert(s);
    for (const std::string& s : expr_symbols(rhs)) symbols.insert(s);

    RingDescriptor target = RingDescriptor::matrix(options.dim);
    for (int trial = 0; trial < options.trials; ++trial) {
        SplitMix64 rng = SplitMix64::substream(options.seed, static_cast<std::uint64_t>(trial));
        bool compared = false;
        for (int attempt = 0; attempt < options.trial_retries && !compared; ++attempt) {
            Binding binding;
            for (const std::string& s : symbols)
                binding.emplace(s, random_invertible_matrix(options.dim, rng, options.entry_min,
                                                            options.entry_max));
            try {
                RingValue left = evaluate(lhs, target, binding);
                RingValue right = evaluate(rhs, target, binding);
                if (!eq(left, right)) return false;
                compared = true;
            } catch (const NotInvertible&) {
                // A required inverse failed for this binding; draw a fresh one.
            }
        }
        if (!compared)
            throw RetriesExhausted("polynomial identity test: every binding of trial " +
                                   std::to_string(trial) + " hit a non-invertible subexpression");
    }
    return true;
}

bool pit_equal(const ExprPtr& lhs, const ExprPtr& rhs, const PitOptions& options) {
    return pit_equal(*lhs, *rhs, options);
}

bool pit_equal(const Expr& lhs, const Expr& rhs, int trials, int dim, std::uint64_t seed) {
    PitOptions options;
    options.trials = trials;
    options.dim = dim;
    options.seed = seed;
    return pit_equal(lhs, rhs, options);
}

}  // namespace ncfrieze
