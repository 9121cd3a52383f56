#include "ncfrieze/quasidet.hpp"

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

RingValue quasidet(const RingMatrix& a, int i, int j) {
    if (a.rows != a.cols) throw DimensionMismatch("quasideterminants need a square matrix");
    const int n = a.rows;
    if (i < 1 || i > n || j < 1 || j > n) throw DimensionMismatch("quasideterminant position out of range");
    if (n == 1) return a.at(0, 0);

    std::vector<RingValue> minor, row_rest, col_rest;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r == i - 1 && c == j - 1) continue;
            if (r == i - 1)
                row_rest.push_back(a.at(r, c));
            else if (c == j - 1)
                col_rest.push_back(a.at(r, c));
            else
                minor.push_back(a.at(r, c));
        }
    }
    RingMatrix submatrix(n - 1, n - 1, a.element_ring, std::move(minor));
    RingMatrix inverse = [&] {
        try {
            return n - 1 == 2 ? invert_2x2(submatrix) : invert_matrix(submatrix);
        } catch (const NotInvertible& e) {
            throw SubmatrixNotInvertible("quasideterminant undefined at (" + std::to_string(i) + "," +
                                         std::to_string(j) + "): " + e.what());
        }
    }();
    RingMatrix row(1, n - 1, a.element_ring, std::move(row_rest));
    RingMatrix col(n - 1, 1, a.element_ring, std::move(col_rest));
    RingMatrix correction = mat_mul(mat_mul(row, inverse), col);
    return sub(a.at(i - 1, j - 1), correction.at(0, 0));
}

RingMatrix neighbouring_submatrix(const Frieze& f, long i, long j) {
    if (j - i < 2 || j - i > f.size())
        throw Error("neighbouring 3x3 windows exist for j - i in [2, m]");
    std::vector<RingValue> data;
    data.reserve(9);
    for (long r = i; r <= i + 2; ++r)
        for (long c = j - 1; c <= j + 1; ++c) data.push_back(f.extended(r, c));
    return RingMatrix(3, 3, f.ring(), std::move(data));
}

VerificationReport tame_scan(const Frieze& f) {
    VerificationReport report;
    report.probabilistic = f.ring().kind == RingKind::free_skew;
    const long m = f.size();
    long wraparound_windows = 0;
    for (long i = 0; i < m; ++i) {
        for (long gap = 2; gap <= m; ++gap) {
            long j = i + gap;
            ++report.positions_checked;
            // The window contains a signed flank entry exactly at the extreme
            // gaps; there the naive modular reading would disagree.
            if (gap == 2 || gap == m) ++wraparound_windows;
            try {
                RingValue value = quasidet(neighbouring_submatrix(f, i, j), 3, 3);
                if (!is_zero(value))
                    report.violations.push_back(
                        {"quasideterminant", {i, j}, "|M|_{3,3} = " + value_to_string(value)});
            } catch (const SubmatrixNotInvertible& e) {
                report.violations.push_back({"quasideterminant (undefined)", {i, j}, e.what()});
            } catch (const NotInvertible& e) {
                report.violations.push_back({"quasideterminant (not invertible)", {i, j}, e.what()});
            }
        }
    }
    if (wraparound_windows > 0)
        report.notes.push_back(std::to_string(wraparound_windows) +
                               " wraparound windows use extended-pattern entries (a naive "
                               "modular reading differs there)");
    return report;
}

std::pair<RingValue, RingValue> dependence_witness(const Frieze& f, long i, long j) {
    (void)i;  // the witness depends on the column position only
    RingValue s = neg(mul(invert(f.at(j, j - 1)), f.at(j, j + 1)));
    RingValue t = mul(invert(f.at(j - 1, j)), f.at(j - 1, j + 1));
    return {std::move(s), std::move(t)};
}

}  // namespace ncfrieze
