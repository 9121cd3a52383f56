#include "ncfrieze/report.hpp"

#include <sstream>

namespace ncfrieze {

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << violations.size() << " violations / ";
    if (positions_checked > 0)
        out << positions_checked << " positions";
    else
        out << triangles_checked << " triangles, " << exchanges_checked << " exchange relations";
    if (probabilistic) out << " (probabilistic)";
    return out.str();
}

std::string violation_to_string(const Violation& v) {
    std::ostringstream out;
    out << v.kind << " at (";
    for (std::size_t n = 0; n < v.where.size(); ++n) out << (n ? "," : "") << v.where[n];
    out << "): " << v.detail;
    return out.str();
}

}  // namespace ncfrieze
