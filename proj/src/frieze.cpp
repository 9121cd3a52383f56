#include "ncfrieze/frieze.hpp"

#include <sstream>

#include "ncfrieze/errors.hpp"
#include "ncfrieze/expr.hpp"

namespace ncfrieze {

namespace {

long reduce_mod(long v, long m) { return ((v % m) + m) % m; }

// Inverse of a frieze entry. Exact backends invert; the free backend wraps
// the payload in a power node so the whole relation can go to the identity
// tester unevaluated.
RingValue entry_inverse(const RingValue& v) {
    if (v.ring.kind == RingKind::free_skew) return {v.ring, make_power(v.as_expr(), -1)};
    return invert(v);
}

bool sides_equal(const RingValue& lhs, const RingValue& rhs, const VerifyOptions& options) {
    if (lhs.ring.kind == RingKind::free_skew)
        return pit_equal(lhs.as_expr(), rhs.as_expr(), options.pit);
    return eq(lhs, rhs);
}

std::string sides_to_string(const RingValue& lhs, const RingValue& rhs) {
    return "lhs = " + value_to_string(lhs) + ", rhs = " + value_to_string(rhs);
}

}  // namespace

Frieze::Frieze(RingDescriptor ring, int m, std::vector<RingValue> entries)
    : ring_(std::move(ring)), m_(m), entries_(std::move(entries)) {
    if (m_ < 3) throw FormatError("a frieze needs at least 3 vertices");
    if (entries_.size() != static_cast<std::size_t>(m_) * m_)
        throw FormatError("frieze entry table has the wrong size");
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            if (i == j) continue;
            const RingValue& v = entries_[static_cast<std::size_t>(i) * m_ + j];
            if (!(v.ring == ring_))
                throw DescriptorMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") lives in " + v.ring.name());
            if (ring_.kind != RingKind::free_skew && !is_invertible(v))
                throw NotInvertible("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not invertible");
        }
    }
}

Frieze Frieze::build(RingDescriptor ring, int m, const std::function<RingValue(int, int)>& entry) {
    std::vector<RingValue> entries;
    entries.reserve(static_cast<std::size_t>(m) * m);
    RingValue filler = ring_zero(ring);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) entries.push_back(i == j ? filler : entry(i, j));
    return Frieze(std::move(ring), m, std::move(entries));
}

const RingValue& Frieze::at(long i, long j) const {
    long ri = reduce_mod(i, m_), rj = reduce_mod(j, m_);
    if (ri == rj) throw Error("diagonal entry c_{i,i} requested; it is 0 by convention");
    return entries_[static_cast<std::size_t>(ri) * m_ + rj];
}

RingValue Frieze::extended(long i, long j) const {
    long gap = j - i;
    if (gap == -1) return neg(at(i, i - 1));
    if (gap == 0 || gap == m_) return ring_zero(ring_);
    if (gap == m_ + 1) return neg(at(i, i + 1));
    if (gap > 0 && gap < m_) return at(i, j);
    throw Error("extended entry only defined for j - i in [-1, m+1], got " + std::to_string(gap));
}

bool triangle_holds(const Frieze& f, long i, long j, long k, const VerifyOptions& options) {
    long m = f.size();
    if (reduce_mod(i, m) == reduce_mod(j, m) || reduce_mod(j, m) == reduce_mod(k, m) ||
        reduce_mod(i, m) == reduce_mod(k, m))
        throw Error("triangle relation needs distinct vertices");
    RingValue lhs = mul(mul(f.at(i, j), entry_inverse(f.at(k, j))), f.at(k, i));
    RingValue rhs = mul(mul(f.at(i, k), entry_inverse(f.at(j, k))), f.at(j, i));
    return sides_equal(lhs, rhs, options);
}

bool triangle_holds_inverted(const Frieze& f, long i, long j, long k, const VerifyOptions& options) {
    RingValue lhs = mul(mul(entry_inverse(f.at(k, i)), f.at(k, j)), entry_inverse(f.at(i, j)));
    RingValue rhs = mul(mul(entry_inverse(f.at(j, i)), f.at(j, k)), entry_inverse(f.at(i, k)));
    return sides_equal(lhs, rhs, options);
}

namespace {

struct ExchangeSides {
    RingValue lhs, rhs;
};

ExchangeSides exchange_sides(const Frieze& f, long a, long b, long c, long d,
                             QuadDiagonal diagonal) {
    auto three = [&](long p, long q, long r, long s, long t, long u) {
        return mul(mul(f.at(p, q), entry_inverse(f.at(r, s))), f.at(t, u));
    };
    switch (diagonal) {
        case QuadDiagonal::third_to_first:
            return {f.at(c, a), add(three(c, d, b, d, b, a), three(c, b, d, b, d, a))};
        case QuadDiagonal::first_to_third:
            return {f.at(a, c), add(three(a, b, d, b, d, c), three(a, d, b, d, b, c))};
        case QuadDiagonal::second_to_fourth:
            return {f.at(b, d), add(three(b, a, c, a, c, d), three(b, c, a, c, a, d))};
        case QuadDiagonal::fourth_to_second:
            return {f.at(d, b), add(three(d, c, a, c, a, b), three(d, a, c, a, c, b))};
    }
    throw Error("unreachable diagonal");
}

void require_cyclic(const Frieze& f, long a, long b, long c, long d) {
    long m = f.size();
    long p = reduce_mod(b - a, m), q = reduce_mod(c - a, m), r = reduce_mod(d - a, m);
    if (p == 0 || q == 0 || r == 0 || !(p < q && q < r))
        throw Error("quadrangle vertices must be in strict cyclic order");
}

}  // namespace

bool exchange_holds(const Frieze& f, long a, long b, long c, long d, QuadDiagonal diagonal,
                    const VerifyOptions& options) {
    require_cyclic(f, a, b, c, d);
    ExchangeSides sides = exchange_sides(f, a, b, c, d, diagonal);
    return sides_equal(sides.lhs, sides.rhs, options);
}

namespace {

const char* diagonal_name(QuadDiagonal diagonal) {
    switch (diagonal) {
        case QuadDiagonal::third_to_first: return "(c,a)";
        case QuadDiagonal::first_to_third: return "(a,c)";
        case QuadDiagonal::second_to_fourth: return "(b,d)";
        case QuadDiagonal::fourth_to_second: return "(d,b)";
    }
    return "?";
}

// Runs one relation check, catching ring errors into the report.
template <typename Check>
void run_check(VerificationReport& report, const std::string& kind, std::vector<long> where,
               Check&& check) {
    try {
        if (auto detail = check()) {
            report.violations.push_back({kind, std::move(where), *detail});
        }
    } catch (const NotInvertible& e) {
        report.violations.push_back({kind + " (not invertible)", std::move(where), e.what()});
    } catch (const RetriesExhausted& e) {
        report.violations.push_back({kind + " (undecided)", std::move(where), e.what()});
    }
}

void check_triangle(VerificationReport& report, const Frieze& f, const std::string& kind, long i,
                    long j, long k, bool inverted, const VerifyOptions& options) {
    ++report.triangles_checked;
    run_check(report, kind, {i, j, k}, [&]() -> std::optional<std::string> {
        bool holds = inverted ? triangle_holds_inverted(f, i, j, k, options)
                              : triangle_holds(f, i, j, k, options);
        if (holds) return std::nullopt;
        RingValue lhs = inverted
                            ? mul(mul(entry_inverse(f.at(k, i)), f.at(k, j)), entry_inverse(f.at(i, j)))
                            : mul(mul(f.at(i, j), entry_inverse(f.at(k, j))), f.at(k, i));
        RingValue rhs = inverted
                            ? mul(mul(entry_inverse(f.at(j, i)), f.at(j, k)), entry_inverse(f.at(i, k)))
                            : mul(mul(f.at(i, k), entry_inverse(f.at(j, k))), f.at(j, i));
        return sides_to_string(lhs, rhs);
    });
}

void check_exchange(VerificationReport& report, const Frieze& f, const std::string& kind, long a,
                    long b, long c, long d, QuadDiagonal diagonal, const VerifyOptions& options) {
    ++report.exchanges_checked;
    run_check(report, kind + " " + diagonal_name(diagonal), {a, b, c, d},
              [&]() -> std::optional<std::string> {
                  ExchangeSides sides = exchange_sides(f, a, b, c, d, diagonal);
                  if (sides_equal(sides.lhs, sides.rhs, options)) return std::nullopt;
                  return sides_to_string(sides.lhs, sides.rhs);
              });
}

// Unordered pairs of disjoint boundary edges (a,a+1), (b,b+1); each quadrangle
// (a, a+1, b, b+1) is listed once, in strict cyclic order.
template <typename Visit>
void for_each_local_quadrangle(long m, Visit&& visit) {
    for (long a = 0; a < m; ++a) {
        for (long b = a + 2; b < m; ++b) {
            if (a == 0 && b == m - 1) continue;
            visit(a, a + 1, b, (b + 1) % m);
        }
    }
}

}  // namespace

VerificationReport verify_local(const Frieze& f, const VerifyOptions& options) {
    VerificationReport report;
    report.probabilistic = f.ring().kind == RingKind::free_skew;
    long m = f.size();
    for (long i = 0; i < m; ++i) {
        check_triangle(report, f, "local triangle", i + 1, i + 2, i, false, options);
        check_triangle(report, f, "local triangle (inverted)", i + 1, i + 2, i, true, options);
    }
    for_each_local_quadrangle(m, [&](long a, long b, long c, long d) {
        for (QuadDiagonal diagonal : kAllQuadDiagonals)
            check_exchange(report, f, "local exchange", a, b, c, d, diagonal, options);
    });
    return report;
}

VerificationReport verify_weak_local_triangles(const Frieze& f, const VerifyOptions& options) {
    VerificationReport report;
    report.probabilistic = f.ring().kind == RingKind::free_skew;
    long m = f.size();
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < m; ++k) {
            if (k == i || k == (i + 1) % m) continue;
            check_triangle(report, f, "weak local triangle", i, i + 1, k, false, options);
        }
    return report;
}

VerificationReport verify_all(const Frieze& f, const VerifyOptions& options) {
    VerificationReport report;
    report.probabilistic = f.ring().kind == RingKind::free_skew;
    long m = f.size();
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            for (long k = j + 1; k < m; ++k)
                check_triangle(report, f, "triangle", i, j, k, false, options);
    for (long a = 0; a < m; ++a)
        for (long b = a + 1; b < m; ++b)
            for (long c = b + 1; c < m; ++c)
                for (long d = c + 1; d < m; ++d)
                    for (QuadDiagonal diagonal : kAllQuadDiagonals)
                        check_exchange(report, f, "exchange", a, b, c, d, diagonal, options);
    return report;
}

Frieze generate_fan(int m, const RingDescriptor& ring, std::uint64_t seed, long max_coeff,
                    FanProfile profile) {
    if (m < 3) throw GenerationFailed("fan generation needs m >= 3");
    if (ring.kind == RingKind::free_skew)
        throw GenerationFailed("fan generation supports rational, quaternion and matrix rings");

    constexpr int kAttempts = 64;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(attempt));
        auto draw = [&]() {
            return profile == FanProfile::all_ones ? ring_one(ring)
                                                   : sample_invertible(ring, rng, max_coeff);
        };

        std::vector<RingValue> entries(static_cast<std::size_t>(m) * m, ring_zero(ring));
        auto put = [&](long i, long j, RingValue v) {
            entries[static_cast<std::size_t>(i) * m + j] = std::move(v);
        };
        auto get = [&](long i, long j) -> const RingValue& {
            return entries[static_cast<std::size_t>(((i % m) + m) % m) * m + (((j % m) + m) % m)];
        };

        for (long r = 1; r < m; ++r) {
            put(0, r, draw());
            put(r, 0, draw());
        }
        for (long r = 1; r < m - 1; ++r) put(r, r + 1, draw());

        bool failed = false;
        // Backward boundary from the fan triangle relation at (0, r, r+1).
        for (long r = 1; r < m - 1 && !failed; ++r) {
            RingValue v = mul(mul(mul(mul(get(r + 1, 0), invert(get(r, 0))), get(r, r + 1)),
                                  invert(get(0, r + 1))),
                              get(0, r));
            failed = !is_invertible(v);
            put(r + 1, r, std::move(v));
        }
        // Remaining diagonals by increasing gap, through exchange relations in
        // the quadrangle (0, i, i+1, j).
        for (long gap = 2; gap < m - 1 && !failed; ++gap) {
            for (long i = 1; i + gap < m && !failed; ++i) {
                long j = i + gap;
                RingValue backward = add(mul(mul(get(j, 0), invert(get(i + 1, 0))), get(i + 1, i)),
                                         mul(mul(get(j, i + 1), invert(get(0, i + 1))), get(0, i)));
                RingValue forward = add(mul(mul(get(i, i + 1), invert(get(0, i + 1))), get(0, j)),
                                        mul(mul(get(i, 0), invert(get(i + 1, 0))), get(i + 1, j)));
                failed = !is_invertible(backward) || !is_invertible(forward);
                put(j, i, std::move(backward));
                put(i, j, std::move(forward));
            }
        }
        if (failed) continue;

        Frieze candidate(ring, m, std::move(entries));
        if (verify_local(candidate).ok()) return candidate;
    }
    throw GenerationFailed("fan generation kept producing non-invertible or invalid tables");
}

}  // namespace ncfrieze
