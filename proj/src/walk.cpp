#include "onerel/walk.hpp"

namespace onerel {

Walk::Walk(const Word& w) : word_(w) {
    const std::size_t k = static_cast<std::size_t>(w.rank());
    flat_.assign((w.size() + 1) * k, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter l = w[i];
        const std::size_t base = i * k;
        for (std::size_t a = 0; a < k; ++a) flat_[base + k + a] = flat_[base + a];
        flat_[base + k + static_cast<std::size_t>(l.gen() - 1)] += l.sign();
    }
    xi_.assign(k, 0);
    for (std::size_t a = 0; a < k; ++a) xi_[a] = flat_[w.size() * k + a];
}

Point Walk::vertex(std::size_t i) const {
    const std::size_t k = static_cast<std::size_t>(rank());
    return Point(flat_.begin() + static_cast<std::ptrdiff_t>(i * k),
                 flat_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
}

std::map<Point, std::vector<std::size_t>> Walk::visit_positions() const {
    std::map<Point, std::vector<std::size_t>> r;
    for (std::size_t i = 0; i <= length(); ++i) r[vertex(i)].push_back(i);
    return r;
}

Walk trace_walk(const Word& w) { return Walk(w); }

LetterTrace letter_trace(const Walk& walk, Generator t) {
    LetterTrace lt{t, {}, {}, {}, {}};
    for (std::size_t i = 0; i < walk.length(); ++i) {
        if (walk.edge_letter(i).gen() != t.index) continue;
        lt.edges.push_back(i);
        lt.vertex_incidence[walk.vertex(i)] += 1;
        lt.vertex_incidence[walk.vertex(i + 1)] += 1;
    }
    for (std::size_t i = 0; i <= walk.length(); ++i) {
        Point v = walk.vertex(i);
        lt.visit_multiplicity[v] += 1;
        lt.first_visit.emplace(std::move(v), i);
    }
    return lt;
}

}  // namespace onerel
