#include "ncfrieze/quiddity.hpp"

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

QuiddityCycle make_quiddity_cycle(RingDescriptor ring, std::vector<RingValue> boundary_fwd,
                                  std::vector<RingValue> boundary_bwd,
                                  std::vector<RingValue> quiddity) {
    const std::size_t m = boundary_fwd.size();
    if (m < 1) throw FormatError("quiddity cycles need m >= 1");
    if (boundary_bwd.size() != m || quiddity.size() != m)
        throw FormatError("quiddity cycle arrays must all have length m");
    auto check = [&](const std::vector<RingValue>& values, const char* label, bool must_invert) {
        for (std::size_t n = 0; n < m; ++n) {
            if (!(values[n].ring == ring))
                throw DescriptorMismatch(std::string(label) + "[" + std::to_string(n) +
                                         "] lives in the wrong ring");
            if (must_invert && !is_invertible(values[n]))
                throw NotInvertible(std::string(label) + "[" + std::to_string(n) +
                                    "] is not invertible");
        }
    };
    check(boundary_fwd, "boundary_fwd", true);
    check(boundary_bwd, "boundary_bwd", true);
    check(quiddity, "quiddity", false);
    QuiddityCycle cycle;
    cycle.ring = std::move(ring);
    cycle.m = static_cast<int>(m);
    cycle.boundary_fwd = std::move(boundary_fwd);
    cycle.boundary_bwd = std::move(boundary_bwd);
    cycle.quiddity = std::move(quiddity);
    return cycle;
}

RingMatrix cycle_product(const QuiddityCycle& cycle) {
    const int m = cycle.m;
    RingMatrix acc =
        mu(cycle.quiddity[0], cycle.boundary_fwd[1 % m], cycle.boundary_bwd[0], cycle.boundary_fwd[0])
            .matrix;
    for (int r = 1; r < m; ++r) {
        acc = mat_mul(acc, mu(cycle.quiddity[r], cycle.boundary_fwd[(r + 1) % m],
                              cycle.boundary_bwd[r], cycle.boundary_fwd[r])
                               .matrix);
    }
    return acc;
}

bool verify_cycle(const QuiddityCycle& cycle) {
    return mat_eq(cycle_product(cycle), mat_neg_identity(2, cycle.ring));
}

QuiddityCycle extract(const Frieze& f) {
    const int m = f.size();
    std::vector<RingValue> d, dprime, c;
    d.reserve(m);
    dprime.reserve(m);
    c.reserve(m);
    for (int i = 0; i < m; ++i) {
        d.push_back(f.at(i, i + 1));
        dprime.push_back(f.at(i + 1, i));
        c.push_back(f.at(i, i + 2));
    }
    return make_quiddity_cycle(f.ring(), std::move(d), std::move(dprime), std::move(c));
}

Frieze complete(const QuiddityCycle& cycle) {
    return complete(cycle.boundary_fwd, cycle.boundary_bwd, cycle.quiddity, cycle.ring);
}

QuiddityCycle m3_family(const std::vector<RingValue>& boundary_fwd,
                        const std::vector<RingValue>& boundary_bwd) {
    if (boundary_fwd.size() != 3 || boundary_bwd.size() != 3)
        throw FormatError("the m=3 family takes three boundary values each way");
    const auto& d = boundary_fwd;
    const auto& dp = boundary_bwd;
    for (int n = 0; n < 3; ++n)
        if (!is_invertible(d[n]) || !is_invertible(dp[n]))
            throw NotInvertible("m3_family boundary values must be invertible");
    RingValue lhs = mul(mul(d[2], invert(dp[0])), d[1]);
    RingValue rhs = mul(mul(dp[1], invert(d[0])), dp[2]);
    if (!eq(lhs, rhs))
        throw ConstraintViolated("m=3 family needs d_2 (d_0')^-1 d_1 = d_1' d_0^-1 d_2'; got " +
                                 value_to_string(lhs) + " vs " + value_to_string(rhs));
    return make_quiddity_cycle(d[0].ring, d, dp, {dp[2], dp[0], dp[1]});
}

QuiddityCycle reduce_at(const QuiddityCycle& cycle, long r) {
    const long m = cycle.m;
    if (m < 3) throw FormatError("reduction needs m >= 3");
    auto idx = [&](long v) { return static_cast<std::size_t>(((v % m) + m) % m); };
    const std::size_t prev = idx(r - 1), here = idx(r), next = idx(r + 1), after = idx(r + 2);
    const auto& d = cycle.boundary_fwd;
    const auto& dp = cycle.boundary_bwd;
    const auto& c = cycle.quiddity;
    if (!is_invertible(c[here]))
        throw NotInvertible("reduce_at needs c_r invertible: it fills the e/f slots of the "
                            "replacement mu factors");

    // First replacement factor mu(C1, c_r, d_{r-1}', d_{r-1}).
    RingValue first_c =
        add(neg(mul(mul(d[prev], invert(dp[here])), d[next])), mul(mul(c[prev], invert(d[here])), c[here]));
    // Second replacement factor mu(C2, d_{r+2}, E2, c_r).
    RingValue second_c = add(neg(mul(mul(d[here], invert(dp[next])), d[after])),
                             mul(mul(c[here], invert(d[next])), c[next]));
    RingValue second_dp =
        mul(mul(mul(mul(dp[next], invert(d[here])), c[here]), invert(d[next])), dp[here]);

    std::vector<RingValue> new_d, new_dp, new_c;
    new_d.reserve(m - 1);
    new_dp.reserve(m - 1);
    new_c.reserve(m - 1);
    for (std::size_t p = 0; p < static_cast<std::size_t>(m); ++p) {
        if (p == prev) {
            new_c.push_back(first_c);
            new_d.push_back(d[prev]);
            new_dp.push_back(dp[prev]);
        } else if (p == here) {
            new_c.push_back(second_c);
            new_d.push_back(c[here]);
            new_dp.push_back(second_dp);
        } else if (p == next) {
            // cut away
        } else {
            new_c.push_back(c[p]);
            new_d.push_back(d[p]);
            new_dp.push_back(dp[p]);
        }
    }
    QuiddityCycle reduced =
        make_quiddity_cycle(cycle.ring, std::move(new_d), std::move(new_dp), std::move(new_c));
    reduced.cut_index = static_cast<int>(here);
    reduced.parent_m = static_cast<int>(m);
    return reduced;
}

}  // namespace ncfrieze
