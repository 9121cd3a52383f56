#pragma once

#include <string>
#include <vector>

namespace ncfrieze {

// One violated (or undecidable) relation: which relation, at which vertices,
// and the rendered sides or error text.
struct Violation {
    std::string kind;
    std::vector<long> where;
    std::string detail;
};

struct VerificationReport {
    long triangles_checked = 0;
    long exchanges_checked = 0;
    long positions_checked = 0;  // tame scan windows
    bool probabilistic = false;  // verdicts obtained through randomized identity testing
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

std::string violation_to_string(const Violation& v);

}  // namespace ncfrieze
