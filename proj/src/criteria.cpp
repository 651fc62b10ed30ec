#include "onerel/criteria.hpp"

#include <algorithm>
#include <set>

namespace onerel {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::AscendingHNN: return "AscendingHNN";
        case VerdictKind::NotAscending: return "NotAscending";
        case VerdictKind::Embeddable: return "Embeddable";
        case VerdictKind::Unknown: return "Unknown";
        case VerdictKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

// Cyclic visit structure of one supporting line c(v) == extreme. The word is
// cyclic, so position N is the same cyclic position as 0.
struct LineMeeting {
    std::vector<std::size_t> vertex_times;  // cyclic positions on the line, in [0, N)
    std::vector<std::size_t> edge_times;    // edges with both endpoints on the line
};

LineMeeting line_meeting(const std::vector<BigInt>& values, const BigInt& extreme) {
    LineMeeting m;
    const std::size_t n = values.size() - 1;  // word length
    for (std::size_t t = 0; t < n; ++t)
        if (values[t] == extreme) m.vertex_times.push_back(t);
    for (std::size_t i = 0; i < n; ++i)
        if (values[i] == extreme && values[i + 1] == extreme) m.edge_times.push_back(i);
    return m;
}

// One simple vertex (a single cyclic visit) or one simple edge (a single
// traversal whose endpoints meet the line only through it).
bool qualifies(const LineMeeting& m, std::size_t n, bool* is_edge, std::size_t* position) {
    if (m.edge_times.empty() && m.vertex_times.size() == 1) {
        *is_edge = false;
        *position = m.vertex_times.front();
        return true;
    }
    if (m.edge_times.size() == 1) {
        const std::size_t i = m.edge_times.front();
        std::set<std::size_t> expect{i, (i + 1) % n};
        std::set<std::size_t> got(m.vertex_times.begin(), m.vertex_times.end());
        if (got == expect) {
            *is_edge = true;
            *position = i;
            return true;
        }
    }
    return false;
}

}  // namespace

Verdict brown_criterion(const Word& w) {
    if (w.rank() != 2) throw std::invalid_argument("brown_criterion: rank must be 2");
    if (w.empty()) throw std::invalid_argument("brown_criterion: empty word");
    Verdict v;
    v.core = cyclic_reduce(w).core;
    v.transcript.push_back("cyclically reduced core: " + format_word(v.core));
    if (v.core.empty()) {
        v.kind = VerdictKind::NotApplicable;
        v.transcript.push_back("relator is trivial");
        return v;
    }
    auto sums = exponent_sums(v.core);
    const std::int64_t m = sums[0], n = sums[1];
    if (m == 0 && n == 0) {
        v.kind = VerdictKind::NotApplicable;
        v.transcript.push_back("displacement is zero: relator lies in the commutator subgroup");
        return v;
    }
    v.transcript.push_back("displacement (" + std::to_string(m) + ", " + std::to_string(n) + ")");

    const std::size_t len = v.core.size();
    std::vector<BigInt> values(len + 1);
    std::int64_t x = 0, y = 0;
    values[0] = 0;
    for (std::size_t i = 0; i < len; ++i) {
        Letter l = v.core[i];
        (l.gen() == 1 ? x : y) += l.sign();
        values[i + 1] = BigInt(m) * y - BigInt(n) * x;
    }
    const BigInt vmax = *std::max_element(values.begin(), values.end());
    const BigInt vmin = *std::min_element(values.begin(), values.end());

    for (int side = 0; side < (vmax == vmin ? 1 : 2); ++side) {
        const BigInt extreme = side == 0 ? vmax : vmin;
        LineMeeting meet = line_meeting(values, extreme);
        bool is_edge = false;
        std::size_t pos = 0;
        const std::string name = side == 0 ? "upper" : "lower";
        if (qualifies(meet, len, &is_edge, &pos)) {
            BrownWitness wit;
            wit.normal = side == 0 ? std::vector<BigInt>{BigInt(-n), BigInt(m)}
                                   : std::vector<BigInt>{BigInt(n), BigInt(-m)};
            wit.line_value = side == 0 ? vmax : -vmin;
            wit.is_edge = is_edge;
            wit.position = pos;
            v.brown = wit;
            v.kind = VerdictKind::AscendingHNN;
            v.transcript.push_back(name + " supporting line meets the trace in one simple " +
                                   (is_edge ? std::string("edge at index ") : std::string("vertex at position ")) +
                                   std::to_string(pos));
            return v;
        }
        v.transcript.push_back(name + " supporting line: " + std::to_string(meet.vertex_times.size()) +
                               " cyclic visits, " + std::to_string(meet.edge_times.size()) +
                               " line edges; not a single simple vertex or edge");
    }
    v.kind = VerdictKind::NotAscending;
    return v;
}

Verdict embeddable_criterion(const Word& w) {
    if (w.empty()) throw std::invalid_argument("embeddable_criterion: empty word");
    if (w.rank() < 2) throw std::invalid_argument("embeddable_criterion: rank must be >= 2");
    Verdict v;
    v.core = cyclic_reduce(w).core;
    v.transcript.push_back("cyclically reduced core: " + format_word(v.core));
    if (v.core.empty()) {
        v.kind = VerdictKind::NotApplicable;
        v.transcript.push_back("relator is trivial");
        return v;
    }
    Walk walk = trace_walk(v.core);
    bool xi_zero = std::all_of(walk.displacement().begin(), walk.displacement().end(),
                               [](std::int64_t c) { return c == 0; });
    if (xi_zero) {
        v.kind = VerdictKind::NotApplicable;
        v.transcript.push_back("displacement is zero: relator lies in the commutator subgroup");
        return v;
    }
    auto cert = touching_hyperplane(walk);
    if (cert) {
        v.kind = VerdictKind::Embeddable;
        v.touching = cert;
        v.transcript.push_back(
            std::string("touching hyperplane on letter x") + std::to_string(cert->letter.index) +
            (cert->kind == TouchingCertificate::Kind::SimpleVertex ? " at a simple vertex"
                                                                   : " along a simple edge") +
            ", position " + std::to_string(cert->position));
    } else {
        v.kind = VerdictKind::Unknown;
        v.transcript.push_back("no letter admits a touching hyperplane; criterion is inconclusive");
    }
    return v;
}

bool verify_verdict(const Verdict& v) {
    if (v.kind == VerdictKind::Embeddable) {
        if (!v.touching) return false;
        return check_touching_certificate(trace_walk(v.core), *v.touching);
    }
    if (v.kind != VerdictKind::AscendingHNN) return true;  // nothing to certify
    if (!v.brown || v.core.rank() != 2 || v.core.empty()) return false;
    const BrownWitness& wit = *v.brown;
    auto sums = exponent_sums(v.core);
    // normal must annihilate the displacement and be one of the two rotations
    if (wit.normal.size() != 2) return false;
    if (wit.normal[0] * sums[0] + wit.normal[1] * sums[1] != 0) return false;
    if (wit.normal[0] == 0 && wit.normal[1] == 0) return false;
    const std::size_t len = v.core.size();
    std::vector<BigInt> values(len + 1);
    std::int64_t x = 0, y = 0;
    for (std::size_t i = 0; i < len; ++i) {
        Letter l = v.core[i];
        (l.gen() == 1 ? x : y) += l.sign();
        values[i + 1] = wit.normal[0] * x + wit.normal[1] * y;
    }
    for (const auto& val : values)
        if (val > wit.line_value) return false;
    LineMeeting meet = line_meeting(values, wit.line_value);
    bool is_edge = false;
    std::size_t pos = 0;
    if (!qualifies(meet, len, &is_edge, &pos)) return false;
    return is_edge == wit.is_edge && pos == wit.position;
}

}  // namespace onerel
