#pragma once

#include <cstdint>
#include <functional>

#include "ncfrieze/pit.hpp"
#include "ncfrieze/report.hpp"
#include "ncfrieze/ring.hpp"

namespace ncfrieze {

// Relation checks over the free backend are decided by randomized identity
// testing with these parameters; exact backends ignore them.
struct VerifyOptions {
    PitOptions pit;
};

// Values on all directed diagonals of an m-gon. Entries are invertible
// (checked at construction for exact backends, deferred to randomized spot
// checks for the free backend); the diagonal c_{i,i} = 0 is never stored.
class Frieze {
public:
    // `entries` is row-major m*m with the diagonal slots ignored.
    Frieze(RingDescriptor ring, int m, std::vector<RingValue> entries);

    static Frieze build(RingDescriptor ring, int m,
                        const std::function<RingValue(int, int)>& entry);

    int size() const { return m_; }
    const RingDescriptor& ring() const { return ring_; }

    // Vertex labels are arbitrary integers, reduced mod m; i == j mod m is a
    // usage error.
    const RingValue& at(long i, long j) const;

    // Extended-pattern accessor, defined for j - i in [-1, m+1]:
    //   -c_{i,i-1} | 0 | c_{i,i+1} ... c_{i,i+m-1} | 0 | -c_{i,i+1}
    // The signed flanks make the propagation formulas hold at the boundary.
    RingValue extended(long i, long j) const;

private:
    RingDescriptor ring_;
    int m_;
    std::vector<RingValue> entries_;
};

// c_{i,j} c_{k,j}^-1 c_{k,i} = c_{i,k} c_{j,k}^-1 c_{j,i} for distinct vertices.
bool triangle_holds(const Frieze& f, long i, long j, long k, const VerifyOptions& options = {});

// The inverted form c_{k,i}^-1 c_{k,j} c_{i,j}^-1 = c_{j,i}^-1 c_{j,k} c_{i,k}^-1.
bool triangle_holds_inverted(const Frieze& f, long i, long j, long k,
                             const VerifyOptions& options = {});

// Directed diagonal of a quadrangle (a,b,c,d) in strict cyclic order; the
// crossing diagonals are (a,c) and (b,d).
enum class QuadDiagonal {
    third_to_first,   // c_{c,a} = c_{c,d} c_{b,d}^-1 c_{b,a} + c_{c,b} c_{d,b}^-1 c_{d,a}
    first_to_third,   // c_{a,c} = c_{a,b} c_{d,b}^-1 c_{d,c} + c_{a,d} c_{b,d}^-1 c_{b,c}
    second_to_fourth, // c_{b,d} = c_{b,a} c_{c,a}^-1 c_{c,d} + c_{b,c} c_{a,c}^-1 c_{a,d}
    fourth_to_second, // c_{d,b} = c_{d,c} c_{a,c}^-1 c_{a,b} + c_{d,a} c_{c,a}^-1 c_{c,b}
};

constexpr QuadDiagonal kAllQuadDiagonals[] = {
    QuadDiagonal::third_to_first,
    QuadDiagonal::first_to_third,
    QuadDiagonal::second_to_fourth,
    QuadDiagonal::fourth_to_second,
};

bool exchange_holds(const Frieze& f, long a, long b, long c, long d, QuadDiagonal diagonal,
                    const VerifyOptions& options = {});

// Local relations: triangle relations on consecutive triples (direct and
// inverted form) and all four exchange relations of every quadrangle
// (i, i+1, j, j+1). Empty report <=> f is a noncommutative frieze.
VerificationReport verify_local(const Frieze& f, const VerifyOptions& options = {});

// Triangle relations for all triangles with two consecutive vertices.
VerificationReport verify_weak_local_triangles(const Frieze& f, const VerifyOptions& options = {});

// Every triangle (one anchoring each; the others follow) and every quadrangle
// with all four diagonals.
VerificationReport verify_all(const Frieze& f, const VerifyOptions& options = {});

enum class FanProfile { random_values, all_ones };

// Samples values on the fan triangulation at vertex 0 plus the forward
// boundary, forces the backward boundary through the fan triangle relations,
// fills the remaining diagonals by increasing gap through exchange relations,
// and rejects (fresh substream) until every entry is invertible and
// verify_local is empty. Sampling order: c_{0,r}, c_{r,0} for r = 1..m-1,
// then c_{r,r+1} for r = 1..m-2; throws GenerationFailed after bounded tries.
Frieze generate_fan(int m, const RingDescriptor& ring, std::uint64_t seed, long max_coeff = 3,
                    FanProfile profile = FanProfile::random_values);

}  // namespace ncfrieze
