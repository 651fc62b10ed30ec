#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onerel/hull.hpp"
#include "onerel/word.hpp"

namespace onerel {

enum class VerdictKind {
    AscendingHNN,   // rank-2 criterion, both directions
    NotAscending,   // rank-2 criterion only
    Embeddable,     // touching hyperplane found (sufficient, any rank >= 2)
    Unknown,        // touching criterion inconclusive
    NotApplicable,  // trivial relator or zero displacement
};

std::string to_string(VerdictKind k);

// Witness for a positive rank-2 verdict: the supporting line of the trace
// parallel to the displacement, and the single simple vertex or edge it
// meets. Visits are counted cyclically (start and end of the relator are the
// same position of the cyclic word).
struct BrownWitness {
    std::vector<BigInt> normal;  // (−n, m) or (n, −m) for displacement (m, n)
    BigInt line_value;           // maximum of <normal, v> over the trace
    bool is_edge;
    std::size_t position;  // vertex position, or edge index, in the cyclic core
};

struct Verdict {
    VerdictKind kind;
    Word core;  // cyclically reduced input, geometry is evaluated on it
    std::optional<TouchingCertificate> touching;
    std::optional<BrownWitness> brown;
    std::vector<std::string> transcript;
};

// Brown's supporting-line criterion for rank-2 relators (an iff).
Verdict brown_criterion(const Word& w);

// Touching-hyperplane criterion, sufficient for every rank >= 2. Never
// returns NotAscending.
Verdict embeddable_criterion(const Word& w);

// Revalidates the certificate carried by a positive verdict from scratch.
bool verify_verdict(const Verdict& v);

}  // namespace onerel
