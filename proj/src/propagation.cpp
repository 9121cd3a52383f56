#include "ncfrieze/propagation.hpp"

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

MuMatrix mu(const RingValue& c, const RingValue& d, const RingValue& e, const RingValue& f) {
    if (!(c.ring == d.ring) || !(c.ring == e.ring) || !(c.ring == f.ring))
        throw DescriptorMismatch("mu arguments must share one ring");
    RingValue e_inv = [&] {
        try {
            return invert(e);
        } catch (const NotInvertible& err) {
            throw NotInvertible(std::string("mu: argument e is not invertible: ") + err.what());
        }
    }();
    RingValue f_inv = [&] {
        try {
            return invert(f);
        } catch (const NotInvertible& err) {
            throw NotInvertible(std::string("mu: argument f is not invertible: ") + err.what());
        }
    }();
    std::vector<RingValue> data{ring_zero(c.ring), neg(mul(e_inv, d)), ring_one(c.ring),
                                mul(f_inv, c)};
    return {RingMatrix(2, 2, c.ring, std::move(data)), c, d, e, f};
}

MuMatrix mu_at(const Frieze& f, long r) {
    return mu(f.at(r - 1, r + 1), f.at(r, r + 1), f.at(r, r - 1), f.at(r - 1, r));
}

std::pair<RingValue, RingValue> propagate_row(const Frieze& f, long i, long j) {
    MuMatrix step = mu_at(f, j);
    RingValue a = f.extended(i, j - 1);
    RingValue b = f.extended(i, j);
    // (a, b) * [[0, x], [1, y]] = (b, a x + b y)
    RingValue next = add(mul(a, step.matrix.at(0, 1)), mul(b, step.matrix.at(1, 1)));
    return {std::move(b), std::move(next)};
}

std::pair<RingValue, RingValue> propagate_col(const Frieze& f, long i, long k) {
    RingValue lower_left = neg(mul(f.at(i + 1, i), invert(f.at(i - 1, i))));
    RingValue lower_right = mul(f.at(i + 1, i - 1), invert(f.at(i, i - 1)));
    RingValue a = f.extended(i - 1, k);
    RingValue b = f.extended(i, k);
    // [[0, 1], [p, q]] (a, b)^T = (b, p a + q b)^T
    RingValue next = add(mul(lower_left, a), mul(lower_right, b));
    return {std::move(b), std::move(next)};
}

RingMatrix product_M(const Frieze& f, long i, long j) {
    if (i > j) throw Error("product_M needs i <= j");
    RingMatrix acc = mu_at(f, i).matrix;
    for (long r = i + 1; r <= j; ++r) acc = mat_mul(acc, mu_at(f, r).matrix);
    return acc;
}

RingMatrix monodromy(const Frieze& f) { return product_M(f, 1, f.size()); }

Frieze complete(const std::vector<RingValue>& boundary_fwd,
                const std::vector<RingValue>& boundary_bwd,
                const std::vector<RingValue>& quiddity, const RingDescriptor& ring) {
    const long m = static_cast<long>(boundary_fwd.size());
    if (m < 3) throw FormatError("completion needs m >= 3");
    if (boundary_bwd.size() != static_cast<std::size_t>(m) ||
        quiddity.size() != static_cast<std::size_t>(m))
        throw FormatError("completion seed arrays must all have length m");
    auto check_invertible = [&](const std::vector<RingValue>& values, const char* label) {
        for (long n = 0; n < m; ++n) {
            if (!(values[n].ring == ring))
                throw DescriptorMismatch(std::string(label) + "[" + std::to_string(n) +
                                         "] lives in the wrong ring");
            if (!is_invertible(values[n]))
                throw NotInvertible(std::string(label) + "[" + std::to_string(n) +
                                    "] is not invertible");
        }
    };
    check_invertible(boundary_fwd, "boundary_fwd");
    check_invertible(boundary_bwd, "boundary_bwd");
    check_invertible(quiddity, "quiddity");

    auto idx = [&](long v) { return ((v % m) + m) % m; };
    // mu factor at vertex j, built from the seed data alone.
    auto seed_mu = [&](long j) {
        return mu(quiddity[idx(j - 1)], boundary_fwd[idx(j)], boundary_bwd[idx(j - 1)],
                  boundary_fwd[idx(j - 1)]);
    };

    std::vector<RingValue> entries(static_cast<std::size_t>(m) * m, ring_zero(ring));
    auto put = [&](long i, long j, RingValue v) {
        entries[static_cast<std::size_t>(idx(i)) * m + idx(j)] = std::move(v);
    };

    for (long i = 0; i < m; ++i) {
        put(i, i + 1, boundary_fwd[i]);
        put(i, i + 2, quiddity[i]);
        RingValue prev = boundary_fwd[i];
        RingValue curr = quiddity[i];
        auto step = [&](long j) {
            MuMatrix factor = seed_mu(j);
            RingValue next = add(mul(prev, factor.matrix.at(0, 1)), mul(curr, factor.matrix.at(1, 1)));
            prev = std::move(curr);
            curr = std::move(next);
        };
        for (long j = i + 2; j <= i + m - 2; ++j) {
            try {
                step(j);
            } catch (const NotInvertible& e) {
                throw NotInvertible("row " + std::to_string(i) + ", step j = " + std::to_string(j) +
                                    ": " + e.what());
            }
            put(i, j + 1, curr);
        }
        // Row closure: one step past the last entry must give 0, the next -d_i.
        step(i + m - 1);
        if (!is_zero(curr))
            throw ClosureViolation("row " + std::to_string(i) +
                                   " does not close: expected 0 past the last entry, got " +
                                   value_to_string(curr));
        step(i + m);
        if (!eq(curr, neg(boundary_fwd[i])))
            throw ClosureViolation("row " + std::to_string(i) + " does not close: expected " +
                                   value_to_string(neg(boundary_fwd[i])) + ", got " +
                                   value_to_string(curr));
    }

    Frieze result(ring, static_cast<int>(m), std::move(entries));
    VerificationReport report = verify_local(result);
    if (!report.ok())
        throw LocalRelationViolation("completed table fails local relations: " +
                                     violation_to_string(report.violations.front()));
    return result;
}

}  // namespace ncfrieze
