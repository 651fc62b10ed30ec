#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "onerel/bigint.hpp"
#include "onerel/walk.hpp"

namespace onerel {

// Raised when an operation needs a nonzero displacement (relator outside the
// commutator subgroup). The criteria layer maps it to NotApplicable.
class zero_displacement_error : public std::domain_error {
public:
    zero_displacement_error() : std::domain_error("displacement vector is zero") {}
};

// A 0-cell of the convex hull of the points projected orthogonally to xi.
// `normal` is an integer vector with <normal, xi> = 0 whose functional is
// maximized over the projected point set exactly on this cell's fiber; this
// is checked by exact arithmetic before the report is returned.
struct ZeroCell {
    std::vector<Rational> projected;              // exact orthogonal projection of the fiber
    std::vector<std::pair<Point, int>> projecting;  // lattice points in the fiber with multiplicities
    int total_multiplicity = 0;
    std::vector<BigInt> normal;
    BigInt support_value;  // <normal, p> for every p in the fiber
};

struct HullReport {
    std::vector<ZeroCell> cells;  // ordered by projected coordinate key
    bool is_bad = false;          // no cell has total_multiplicity == 1
};

// Exact 0-cells of conv of the projections p - (<p,xi>/<xi,xi>) xi.
// Points repeat according to multiplicity. Requires xi != 0, k <= 12 and
// coordinates bounded by 1e9.
HullReport hull_zero_cells(const std::vector<Point>& points, const Point& xi);
HullReport hull_zero_cells_weighted(const std::vector<std::pair<Point, int>>& points, const Point& xi);

// Hull of the walk's own vertices (t absent) or of the w_t vertices
// (t given); multiplicities always count walk positions.
HullReport corners(const Walk& walk, std::optional<Generator> t = std::nullopt);

// True iff every 0-cell of the whole-walk hull has two or more projecting
// walk positions.
bool is_bad(const Walk& walk);

// Total corner count of the whole-walk hull, multiplicities included.
std::int64_t corner_count(const Walk& walk);

struct TouchingCertificate {
    enum class Kind { SimpleVertex, SimpleEdge };
    Generator letter{1};
    std::vector<BigInt> normal;  // <normal, xi> = 0; w_t lies on the <= side
    BigInt support_value;
    Kind kind = Kind::SimpleVertex;
    std::size_t position = 0;  // SimpleVertex: earliest walk position at the vertex; SimpleEdge: edge index
    Point element;             // the vertex, or the edge's from-vertex
};

// Searches the letters in ascending order for a supporting hyperplane
// parallel to xi that meets w_t in exactly one simple vertex or exactly one
// simple edge. Ties inside a letter break by earliest walk position.
std::optional<TouchingCertificate> touching_hyperplane(const Walk& walk);

// Re-checks a certificate against the walk from scratch.
bool check_touching_certificate(const Walk& walk, const TouchingCertificate& cert);

// Inserts the commutator of the surrounding letters at a singly covered
// corner so that the new middle vertex leaves the original projected hull.
Word insert_commutator(const Word& w, std::size_t corner_position);

// Basis of the lattice {u in Z^k : <u, xi> = 0}.
std::vector<std::vector<BigInt>> kernel_lattice_basis(const Point& xi);

}  // namespace onerel
