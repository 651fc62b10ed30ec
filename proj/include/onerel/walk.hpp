#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "onerel/word.hpp"

namespace onerel {

using Point = std::vector<std::int64_t>;  // a lattice point in Z^k

// The trace of a word in Z^k: vertices[0] is the origin, vertex i+1 differs
// from vertex i by the signed unit step of letter i. Vertices repeat when the
// walk revisits a point.
class Walk {
public:
    explicit Walk(const Word& w);

    int rank() const { return word_.rank(); }
    std::size_t length() const { return word_.size(); }  // number of edges
    const Word& word() const { return word_; }
    const Point& displacement() const { return xi_; }

    Point vertex(std::size_t i) const;
    std::int64_t coord(std::size_t vertex_index, int axis) const {
        return flat_[vertex_index * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(axis)];
    }
    // Edge i runs from vertex i to vertex i+1 and is labeled word()[i].
    Letter edge_letter(std::size_t i) const { return word_[i]; }

    // Walk positions at each lattice point (every index 0..length() counts).
    std::map<Point, std::vector<std::size_t>> visit_positions() const;

private:
    Word word_;
    std::vector<std::int64_t> flat_;  // (length()+1) * rank coordinates
    Point xi_;
};

Walk trace_walk(const Word& w);

// The edges of a walk labeled by one generator (either sign), with exact
// incidence bookkeeping. A lattice vertex of w_t is simple iff it meets at
// most one edge traversal of w_t.
struct LetterTrace {
    Generator letter;
    std::vector<std::size_t> edges;            // walk edge indices labeled `letter`
    std::map<Point, int> vertex_incidence;     // w_t edge-traversals incident to the point
    std::map<Point, int> visit_multiplicity;   // walk positions at the point (all letters)
    std::map<Point, std::size_t> first_visit;  // earliest walk position at the point

    bool is_simple(const Point& v) const {
        auto it = vertex_incidence.find(v);
        return it == vertex_incidence.end() || it->second <= 1;
    }
};

LetterTrace letter_trace(const Walk& walk, Generator t);

}  // namespace onerel
