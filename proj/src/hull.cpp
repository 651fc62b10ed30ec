#include "onerel/hull.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

namespace onerel {

namespace {

constexpr std::int64_t kCoordBound = 1000000000;  // keeps projected keys inside int64
constexpr int kMaxDim = 12;

using Key = std::vector<std::int64_t>;  // projected coordinates, entries bounded by 2*kCoordBound^2

struct Fiber {
    Point rep;                                 // one lattice point of the fiber
    std::vector<std::pair<Point, int>> points; // all fiber points with multiplicities
    int total = 0;
};

void check_input(const Point& xi, std::size_t k) {
    if (k == 0 || k > kMaxDim)
        throw std::invalid_argument("hull: dimension must be in [1, 12]");
    if (xi.size() != k) throw std::invalid_argument("hull: xi has wrong dimension");
    bool nonzero = false;
    for (auto c : xi) {
        if (c < -kCoordBound || c > kCoordBound)
            throw std::invalid_argument("hull: coordinate bound exceeded");
        if (c != 0) nonzero = true;
    }
    if (!nonzero) throw zero_displacement_error();
}

// Coordinates of p in the plane directions w_j = xi_m e_j - xi_j e_m (j != m)
// where m is a fixed axis with xi_m != 0. Linear in p and vanishing on xi, so
// two points share a key iff their orthogonal projections coincide.
Key projected_key(const Point& p, const Point& xi, std::size_t m) {
    Key key;
    key.reserve(p.size() - 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == m) continue;
        key.push_back(xi[m] * p[j] - xi[j] * p[m]);
    }
    return key;
}

struct Frac {
    BigInt num, den;  // den == 0 encodes infinity; both nonnegative
};

bool frac_less(const Frac& a, const Frac& b) {
    if (a.den == 0) return false;       // inf < x never
    if (b.den == 0) return true;        // finite < inf
    return a.num * b.den < b.num * a.den;
}

// Simplest fraction strictly inside the open interval (lo, hi), 0 <= lo < hi.
Frac simplest_between(const Frac& lo, const Frac& hi) {
    BigInt i = lo.num / lo.den + 1;  // smallest integer > lo (lo >= 0)
    if (hi.den == 0 || i * hi.den < hi.num) return {i, 1};
    BigInt a = i - 1;
    Frac f_lo{lo.num - a * lo.den, lo.den};
    Frac f_hi{hi.num - a * hi.den, hi.den};
    Frac inner = simplest_between({f_hi.den, f_hi.num}, f_lo.num == 0 ? Frac{1, 0} : Frac{f_lo.den, f_lo.num});
    return {a * inner.num + inner.den, inner.num};
}

struct Vec2 {
    BigInt x, y;
};

BigInt dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
BigInt cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 smallest_in_halfplane(const Vec2& c) {
    if (c.x > 0) return {1, 0};
    if (c.x < 0) return {-1, 0};
    if (c.y > 0) return {0, 1};
    if (c.y < 0) return {0, -1};
    throw std::logic_error("hull: empty separation constraint");
}

// Minimal primitive integer vector v with dot2(v, cr) > 0 and dot2(v, cs) > 0.
Vec2 smallest_in_open_cone(const Vec2& cr, const Vec2& cs) {
    BigInt cr_cs = cross2(cr, cs);
    if (cr_cs == 0) {
        if (dot2(cr, cs) > 0) return smallest_in_halfplane(cr);
        throw std::logic_error("hull: infeasible separation cone");
    }
    const Vec2 units[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const Vec2& u : units)
        if (dot2(u, cr) > 0 && dot2(u, cs) > 0) return u;
    Vec2 r1{-cr.y, cr.x};
    if (dot2(r1, cs) < 0) r1 = {-r1.x, -r1.y};
    Vec2 r2{-cs.y, cs.x};
    if (dot2(r2, cr) < 0) r2 = {-r2.x, -r2.y};
    Vec2 d{r1.x + r2.x, r1.y + r2.y};  // interior direction; no unit inside => both parts nonzero
    int sx = d.x > 0 ? 1 : -1;
    int sy = d.y > 0 ? 1 : -1;
    auto to_quadrant = [&](const Vec2& v) { return Vec2{sx * v.x, sy * v.y}; };
    Vec2 q1 = to_quadrant(r1), q2 = to_quadrant(r2);
    auto slope = [](const Vec2& v) {
        return v.x == 0 ? Frac{1, 0} : Frac{v.y < 0 ? -v.y : v.y, v.x < 0 ? -v.x : v.x};
    };
    Frac s1 = slope(q1), s2 = slope(q2);
    Frac lo = frac_less(s1, s2) ? s1 : s2;
    Frac hi = frac_less(s1, s2) ? s2 : s1;
    Frac best = simplest_between(lo, hi);
    Vec2 v{sx * best.den, sy * best.num};
    if (!(dot2(v, cr) > 0 && dot2(v, cs) > 0)) throw std::logic_error("hull: cone search failed");
    return v;
}

// --- exact phase-1 simplex with Bland's rule ------------------------------
//
// Finds u in Q^k with <xi,u> = 0 and <d_j,u> >= 1, or reports infeasibility.
std::optional<std::vector<Rational>> separating_lp(const std::vector<Point>& dirs, const Point& xi) {
    const std::size_t k = xi.size();
    const std::size_t m = dirs.size();
    const std::size_t rows = m + 1;
    const std::size_t structural = 2 * k + m;        // y, z, slacks
    const std::size_t cols = structural + rows;      // + artificials
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));

    for (std::size_t c = 0; c < k; ++c) {
        a[0][c] = xi[c];
        a[0][k + c] = -Rational(xi[c]);
    }
    a[0][cols] = 0;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            a[r + 1][c] = dirs[r][c];
            a[r + 1][k + c] = -Rational(dirs[r][c]);
        }
        a[r + 1][2 * k + r] = -1;  // slack
        a[r + 1][cols] = 1;
    }
    for (std::size_t r = 0; r < rows; ++r) a[r][structural + r] = 1;

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = structural + r;

    std::vector<Rational> obj(cols + 1, Rational(0));  // reduced costs of "minimize sum of artificials"
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c <= cols; ++c)
            if (c < structural || c == cols) obj[c] -= a[r][c];

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        Rational inv = Rational(1) / a[pr][pc];
        for (auto& v : a[pr]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc] == 0) continue;
            Rational f = a[r][pc];
            for (std::size_t c = 0; c <= cols; ++c) a[r][c] -= f * a[pr][c];
        }
        if (obj[pc] != 0) {
            Rational f = obj[pc];
            for (std::size_t c = 0; c <= cols; ++c) obj[c] -= f * a[pr][c];
        }
        basis[pr] = pc;
    };

    while (true) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c) {
            if (obj[c] < 0) {
                enter = c;
                break;  // Bland: smallest index
            }
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best_ratio(0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (a[r][enter] <= 0) continue;
            Rational ratio = a[r][cols] / a[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) throw std::logic_error("hull: unbounded phase-1 objective");
        pivot(leave, enter);
    }

    Rational w = -obj[cols];
    if (w != 0) return std::nullopt;
    std::vector<Rational> u(k, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
        if (basis[r] < k)
            u[basis[r]] += a[r][cols];
        else if (basis[r] < 2 * k)
            u[basis[r] - k] -= a[r][cols];
    }
    return u;
}

std::vector<BigInt> clear_denominators(const std::vector<Rational>& u) {
    BigInt lcm = 1;
    for (const auto& v : u) {
        BigInt den = boost::multiprecision::denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<BigInt> out;
    out.reserve(u.size());
    BigInt g = 0;
    for (const auto& v : u) {
        BigInt e = boost::multiprecision::numerator(v) *
                   (lcm / boost::multiprecision::denominator(v));
        g = boost::multiprecision::gcd(g, e);
        out.push_back(e);
    }
    if (g > 1)
        for (auto& e : out) e /= g;
    return out;
}

BigInt dot_big(const std::vector<BigInt>& u, const Point& p) {
    BigInt s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * p[i];
    return s;
}

}  // namespace

std::vector<std::vector<BigInt>> kernel_lattice_basis(const Point& xi) {
    const std::size_t k = xi.size();
    // Column-reduce xi to (g, 0, ..., 0) with a unimodular matrix; the
    // trailing columns then span the kernel lattice exactly.
    std::vector<std::vector<BigInt>> u(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
    std::vector<BigInt> v(xi.begin(), xi.end());
    for (std::size_t i = 1; i < k; ++i) {
        if (v[i] == 0) continue;
        if (v[0] == 0) {
            std::swap(v[0], v[i]);
            for (std::size_t r = 0; r < k; ++r) std::swap(u[r][0], u[r][i]);
            continue;
        }
        BigInt g, p, q;
        g = boost::multiprecision::gcd(v[0], v[i]);
        // extended gcd for p*v0 + q*vi = g
        {
            BigInt a = v[0], b = v[i], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
            while (b != 0) {
                BigInt t = a / b;
                a -= t * b;
                std::swap(a, b);
                x0 -= t * x1;
                std::swap(x0, x1);
                y0 -= t * y1;
                std::swap(y0, y1);
            }
            if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
            p = x0;
            q = y0;
            assert(a == g);
        }
        BigInt v0g = v[0] / g, vig = v[i] / g;
        for (std::size_t r = 0; r < k; ++r) {
            BigInt c0 = u[r][0], ci = u[r][i];
            u[r][0] = p * c0 + q * ci;
            u[r][i] = -vig * c0 + v0g * ci;
        }
        v[0] = g;
        v[i] = 0;
    }
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t c = 1; c < k; ++c) {
        std::vector<BigInt> col(k);
        for (std::size_t r = 0; r < k; ++r) col[r] = u[r][c];
        basis.push_back(std::move(col));
    }
    return basis;
}

namespace {

// Certificate normal for the extreme fiber `q` given its hull neighbours
// (every other fiber when the projected dimension exceeds 2). For projected
// dimension <= 2 a minimal primitive lattice normal comes from a
// continued-fraction walk of the dual cone; higher dimensions take the
// cleared-denominator LP solution.
std::vector<BigInt> certificate_normal(const Point& xi, const Fiber& q,
                                       const std::vector<const Fiber*>& neighbours) {
    const std::size_t k = xi.size();
    auto basis = kernel_lattice_basis(xi);
    if (basis.empty()) return std::vector<BigInt>(k, 0);  // k == 1
    if (neighbours.empty()) return basis[0];              // single fiber: any parallel normal
    if (k == 2) {
        std::vector<BigInt> u = basis[0];
        const Fiber* other = neighbours[0];
        BigInt d = 0;
        for (std::size_t i = 0; i < k; ++i) d += u[i] * (q.rep[i] - other->rep[i]);
        if (d < 0)
            for (auto& e : u) e = -e;
        return u;
    }
    if (k == 3) {
        auto constraint = [&](const Fiber* f) {
            Vec2 c;
            BigInt cx = 0, cy = 0;
            for (std::size_t i = 0; i < k; ++i) {
                cx += basis[0][i] * (q.rep[i] - f->rep[i]);
                cy += basis[1][i] * (q.rep[i] - f->rep[i]);
            }
            c.x = cx;
            c.y = cy;
            return c;
        };
        Vec2 cr = constraint(neighbours[0]);
        Vec2 cs = constraint(neighbours.size() > 1 ? neighbours[1] : neighbours[0]);
        Vec2 ab = neighbours.size() > 1 ? smallest_in_open_cone(cr, cs)
                                        : smallest_in_halfplane(cr);
        std::vector<BigInt> u(k);
        for (std::size_t i = 0; i < k; ++i) u[i] = ab.x * basis[0][i] + ab.y * basis[1][i];
        return u;
    }
    std::vector<Point> dirs;
    dirs.reserve(neighbours.size());
    for (const Fiber* f : neighbours) {
        Point d(k);
        for (std::size_t i = 0; i < k; ++i) d[i] = q.rep[i] - f->rep[i];
        dirs.push_back(std::move(d));
    }
    auto sol = separating_lp(dirs, xi);
    if (!sol) throw std::logic_error("hull: certificate LP infeasible for extreme point");
    return clear_denominators(*sol);
}

std::vector<std::size_t> planar_hull_ccw(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        Int128 ax = Int128(pts[a].first) - pts[o].first, ay = Int128(pts[a].second) - pts[o].second;
        Int128 bx = Int128(pts[b].first) - pts[o].first, by = Int128(pts[b].second) - pts[o].second;
        return ax * by - ay * bx;
    };
    std::vector<std::size_t> h(2 * n);
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull, strict turns drop collinear points
        while (m >= 2 && cross(h[m - 2], h[m - 1], idx[i]) <= 0) --m;
        h[m++] = idx[i];
    }
    for (std::size_t i = n - 1, lower = m + 1; i-- > 0;) {  // upper hull
        while (m >= lower && cross(h[m - 2], h[m - 1], idx[i]) <= 0) --m;
        h[m++] = idx[i];
    }
    h.resize(n > 1 ? m - 1 : m);
    return h;
}

}  // namespace

HullReport hull_zero_cells_weighted(const std::vector<std::pair<Point, int>>& points, const Point& xi) {
    if (points.empty()) throw std::invalid_argument("hull: empty point set");
    const std::size_t k = xi.size();
    check_input(xi, k);
    std::size_t m_axis = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (std::llabs(xi[i]) > std::llabs(xi[m_axis])) m_axis = i;

    std::map<Key, Fiber> fibers;
    for (const auto& [p, mult] : points) {
        if (p.size() != k) throw std::invalid_argument("hull: point has wrong dimension");
        for (auto c : p)
            if (c < -kCoordBound || c > kCoordBound)
                throw std::invalid_argument("hull: coordinate bound exceeded");
        Fiber& f = fibers[projected_key(p, xi, m_axis)];
        if (f.points.empty()) f.rep = p;
        bool merged = false;
        for (auto& q : f.points)
            if (q.first == p) {
                q.second += mult;
                merged = true;
                break;
            }
        if (!merged) f.points.emplace_back(p, mult);
        f.total += mult;
    }
    for (auto& [key, f] : fibers) std::sort(f.points.begin(), f.points.end());

    std::vector<const Key*> keys;
    std::vector<Fiber*> flist;
    for (auto& [key, f] : fibers) {
        keys.push_back(&key);
        flist.push_back(&f);
    }
    const std::size_t nf = flist.size();
    const std::size_t dim = k - 1;

    // extreme fiber index -> its hull neighbours (empty when nf == 1)
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> extremes;
    if (nf == 1) {
        extremes.push_back({0, {}});
    } else if (dim == 0) {
        throw std::logic_error("hull: distinct projections in dimension 0");
    } else if (dim == 1) {
        // fibers are already in ascending key order
        extremes.push_back({0, {nf - 1}});
        extremes.push_back({nf - 1, {0}});
    } else if (dim == 2) {
        std::vector<std::pair<std::int64_t, std::int64_t>> pts(nf);
        for (std::size_t i = 0; i < nf; ++i) pts[i] = {(*keys[i])[0], (*keys[i])[1]};
        auto h = planar_hull_ccw(pts);
        const std::size_t hs = h.size();
        for (std::size_t j = 0; j < hs; ++j) {
            std::vector<std::size_t> nb;
            if (hs >= 2) {
                nb.push_back(h[(j + hs - 1) % hs]);
                if (hs >= 3) nb.push_back(h[(j + 1) % hs]);
            }
            extremes.push_back({h[j], std::move(nb)});
        }
        std::sort(extremes.begin(), extremes.end());
    } else {
        for (std::size_t i = 0; i < nf; ++i) {
            std::vector<Point> dirs;
            dirs.reserve(nf - 1);
            for (std::size_t j = 0; j < nf; ++j) {
                if (j == i) continue;
                Point d(k);
                for (std::size_t c = 0; c < k; ++c) d[c] = flist[i]->rep[c] - flist[j]->rep[c];
                dirs.push_back(std::move(d));
            }
            if (separating_lp(dirs, xi)) {
                std::vector<std::size_t> nb;
                for (std::size_t j = 0; j < nf; ++j)
                    if (j != i) nb.push_back(j);
                extremes.push_back({i, std::move(nb)});
            }
        }
    }

    BigInt xi_sq = 0;
    for (auto c : xi) xi_sq += BigInt(c) * c;

    HullReport report;
    report.is_bad = true;
    for (const auto& [idx, nb_idx] : extremes) {
        const Fiber& f = *flist[idx];
        ZeroCell cell;
        cell.projecting = f.points;
        cell.total_multiplicity = f.total;
        if (cell.total_multiplicity == 1) report.is_bad = false;
        BigInt dot_xi = 0;
        for (std::size_t c = 0; c < k; ++c) dot_xi += BigInt(xi[c]) * f.rep[c];
        for (std::size_t c = 0; c < k; ++c)
            cell.projected.push_back(Rational(BigInt(f.rep[c]) * xi_sq - dot_xi * xi[c], xi_sq));
        std::vector<const Fiber*> nbs;
        for (auto j : nb_idx) nbs.push_back(flist[j]);
        cell.normal = certificate_normal(xi, f, nbs);
        cell.support_value = dot_big(cell.normal, f.rep);
        report.cells.push_back(std::move(cell));
    }

    // Exact soundness check of every certificate before returning.
    for (const auto& cell : report.cells) {
        BigInt nxi = 0;
        for (std::size_t c = 0; c < k; ++c) nxi += cell.normal[c] * xi[c];
        if (nxi != 0) throw std::logic_error("hull: certificate not orthogonal to xi");
        if (nf > 1) {
            bool all_zero = std::all_of(cell.normal.begin(), cell.normal.end(),
                                        [](const BigInt& e) { return e == 0; });
            if (all_zero) throw std::logic_error("hull: zero certificate for separated cell");
        }
        const Key cell_key = projected_key(cell.projecting.front().first, xi, m_axis);
        for (std::size_t i = 0; i < nf; ++i) {
            BigInt val = dot_big(cell.normal, flist[i]->rep);
            if (*keys[i] == cell_key) {
                if (val != cell.support_value) throw std::logic_error("hull: fiber value mismatch");
            } else if (val >= cell.support_value) {
                throw std::logic_error("hull: certificate fails strict separation");
            }
        }
    }
    return report;
}

HullReport hull_zero_cells(const std::vector<Point>& points, const Point& xi) {
    std::vector<std::pair<Point, int>> weighted;
    weighted.reserve(points.size());
    for (const auto& p : points) weighted.emplace_back(p, 1);
    return hull_zero_cells_weighted(weighted, xi);
}

HullReport corners(const Walk& walk, std::optional<Generator> t) {
    std::vector<std::pair<Point, int>> pts;
    if (t) {
        LetterTrace lt = letter_trace(walk, *t);
        if (lt.edges.empty())
            throw std::invalid_argument("corners: letter does not occur in the walk");
        for (const auto& [v, inc] : lt.vertex_incidence) {
            (void)inc;
            pts.emplace_back(v, lt.visit_multiplicity.at(v));
        }
    } else {
        for (std::size_t i = 0; i <= walk.length(); ++i) pts.emplace_back(walk.vertex(i), 1);
    }
    return hull_zero_cells_weighted(pts, walk.displacement());
}

bool is_bad(const Walk& walk) { return corners(walk).is_bad; }

std::int64_t corner_count(const Walk& walk) {
    HullReport r = corners(walk);
    std::int64_t total = 0;
    for (const auto& c : r.cells) total += c.total_multiplicity;
    return total;
}

namespace {

bool xi_parallel_to_axis(const Point& xi, int gen) {
    for (std::size_t j = 0; j < xi.size(); ++j) {
        if (static_cast<int>(j) == gen - 1) {
            if (xi[j] == 0) return false;
        } else if (xi[j] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<TouchingCertificate> touching_hyperplane(const Walk& walk) {
    const int k = walk.rank();
    const Point& xi = walk.displacement();
    check_input(xi, static_cast<std::size_t>(k));
    for (int g = 1; g <= k; ++g) {
        LetterTrace lt = letter_trace(walk, Generator(g));
        if (lt.edges.empty()) continue;
        std::vector<std::pair<Point, int>> pts;
        for (const auto& [v, inc] : lt.vertex_incidence) {
            (void)inc;
            pts.emplace_back(v, lt.visit_multiplicity.at(v));
        }
        HullReport rep = hull_zero_cells_weighted(pts, xi);
        const bool parallel = xi_parallel_to_axis(xi, g);

        std::optional<TouchingCertificate> best;
        for (const auto& cell : rep.cells) {
            std::vector<std::size_t> fiber_edges;  // traversals whose edge lies in the fiber line
            if (parallel) {
                auto in_fiber = [&](const Point& v) {
                    for (const auto& [p, mult] : cell.projecting) {
                        (void)mult;
                        if (p == v) return true;
                    }
                    return false;
                };
                for (std::size_t e : lt.edges)
                    if (in_fiber(walk.vertex(e))) fiber_edges.push_back(e);
            }
            std::optional<TouchingCertificate> cand;
            if (fiber_edges.empty() && cell.projecting.size() == 1) {
                const Point& v = cell.projecting.front().first;
                if (lt.vertex_incidence.at(v) == 1) {
                    cand = TouchingCertificate{Generator(g), cell.normal, cell.support_value,
                                               TouchingCertificate::Kind::SimpleVertex,
                                               lt.first_visit.at(v), v};
                }
            } else if (fiber_edges.size() == 1 && cell.projecting.size() == 2) {
                std::size_t e = fiber_edges.front();
                Point from = walk.vertex(e), to = walk.vertex(e + 1);
                bool endpoints_match =
                    (cell.projecting[0].first == std::min(from, to) &&
                     cell.projecting[1].first == std::max(from, to));
                if (endpoints_match && lt.vertex_incidence.at(from) == 1 &&
                    lt.vertex_incidence.at(to) == 1) {
                    cand = TouchingCertificate{Generator(g), cell.normal, cell.support_value,
                                               TouchingCertificate::Kind::SimpleEdge, e, from};
                }
            }
            if (cand && (!best || cand->position < best->position)) best = cand;
        }
        if (best) return best;
    }
    return std::nullopt;
}

bool check_touching_certificate(const Walk& walk, const TouchingCertificate& cert) {
    const std::size_t k = static_cast<std::size_t>(walk.rank());
    if (cert.normal.size() != k) return false;
    const Point& xi = walk.displacement();
    BigInt nxi = 0;
    for (std::size_t i = 0; i < k; ++i) nxi += cert.normal[i] * xi[i];
    if (nxi != 0) return false;
    LetterTrace lt = letter_trace(walk, cert.letter);
    if (lt.edges.empty()) return false;
    std::vector<Point> attaining;
    for (const auto& [v, inc] : lt.vertex_incidence) {
        (void)inc;
        BigInt val = dot_big(cert.normal, v);
        if (val > cert.support_value) return false;
        if (val == cert.support_value) attaining.push_back(v);
    }
    if (cert.kind == TouchingCertificate::Kind::SimpleVertex) {
        return attaining.size() == 1 && attaining.front() == cert.element &&
               lt.vertex_incidence.at(cert.element) == 1 &&
               lt.first_visit.at(cert.element) == cert.position;
    }
    if (cert.position >= walk.length()) return false;
    if (walk.edge_letter(cert.position).gen() != cert.letter.index) return false;
    Point from = walk.vertex(cert.position), to = walk.vertex(cert.position + 1);
    if (from != cert.element) return false;
    if (attaining.size() != 2) return false;
    std::sort(attaining.begin(), attaining.end());
    if (attaining[0] != std::min(from, to) || attaining[1] != std::max(from, to)) return false;
    if (lt.vertex_incidence.at(from) != 1 || lt.vertex_incidence.at(to) != 1) return false;
    int traversals = 0;
    for (std::size_t e : lt.edges) {
        Point a = walk.vertex(e), b = walk.vertex(e + 1);
        if (std::min(a, b) == std::min(from, to) && std::max(a, b) == std::max(from, to))
            ++traversals;
    }
    return traversals == 1;
}

Word insert_commutator(const Word& w, std::size_t corner_position) {
    if (!w.is_cyclically_reduced())
        throw std::invalid_argument("insert_commutator: word must be cyclically reduced");
    if (corner_position == 0 || corner_position >= w.size())
        throw std::invalid_argument("insert_commutator: position must be interior");
    Walk walk = trace_walk(w);
    HullReport rep = corners(walk);
    Point v = walk.vertex(corner_position);
    bool singly_covered = false;
    for (const auto& cell : rep.cells) {
        if (cell.total_multiplicity != 1) continue;
        for (const auto& [p, mult] : cell.projecting) {
            (void)mult;
            if (p == v) singly_covered = true;
        }
    }
    if (!singly_covered)
        throw std::invalid_argument("insert_commutator: position is not a singly covered corner");
    Letter alpha = w[corner_position - 1];
    Letter beta = w[corner_position];
    std::vector<Letter> out;
    out.reserve(w.size() + 4);
    for (std::size_t i = 0; i < corner_position; ++i) out.push_back(w[i]);
    out.push_back(alpha);
    out.push_back(beta.inverse());
    out.push_back(alpha.inverse());
    out.push_back(beta);
    for (std::size_t i = corner_position; i < w.size(); ++i) out.push_back(w[i]);
    Word result(std::move(out), w.rank());
    if (!result.is_cyclically_reduced())
        throw std::logic_error("insert_commutator: insertion produced a reducible word");
    return result;
}

}  // namespace onerel
