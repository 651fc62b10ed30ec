#include "onerel/svg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <vector>

#include "onerel/criteria.hpp"
#include "onerel/walk.hpp"

namespace onerel {

namespace {

constexpr std::int64_t kCell = 40;
constexpr std::int64_t kPad = 60;

struct P2 {
    std::int64_t x, y;
    bool operator<(const P2& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

std::vector<P2> hull_of(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    auto cross = [](const P2& o, const P2& a, const P2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<P2> h(2 * n);
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (m >= 2 && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = m + 1; i-- > 0;) {
        while (m >= lower && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    h.resize(m - 1);
    return h;
}

}  // namespace

std::string render_trace_svg(const Word& w) {
    if (w.rank() != 2) throw std::invalid_argument("render_trace_svg: rank must be 2");
    Walk walk = trace_walk(w);
    const std::size_t len = walk.length();

    std::int64_t minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (std::size_t i = 0; i <= len; ++i) {
        minx = std::min(minx, walk.coord(i, 0));
        maxx = std::max(maxx, walk.coord(i, 0));
        miny = std::min(miny, walk.coord(i, 1));
        maxy = std::max(maxy, walk.coord(i, 1));
    }
    const std::int64_t width = (maxx - minx) * kCell + 2 * kPad;
    const std::int64_t height = (maxy - miny) * kCell + 2 * kPad;
    auto sx = [&](std::int64_t x) { return kPad + (x - minx) * kCell; };
    auto sy = [&](std::int64_t y) { return kPad + (maxy - y) * kCell; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<style>.edge{stroke:#1f3a5f;stroke-width:3;stroke-linecap:round}"
           ".support{stroke:#c0392b;stroke-width:1.5;stroke-dasharray:7 5}"
           ".hull{fill:#d6e4f5;fill-opacity:0.45;stroke:#7f9cc4;stroke-width:1}"
           ".origin{fill:#1f3a5f}"
           ".certificate{stroke:#27ae60;stroke-width:6;fill:#27ae60;fill-opacity:0.9}"
           "</style>\n";

    // hull (degenerate hulls render as a segment or point)
    {
        std::vector<P2> pts;
        for (std::size_t i = 0; i <= len; ++i) pts.push_back({walk.coord(i, 0), walk.coord(i, 1)});
        std::vector<P2> h = hull_of(pts);
        if (h.size() >= 2) {
            out << "<polygon class=\"hull\" points=\"";
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (i) out << ' ';
                out << sx(h[i].x) << ',' << sy(h[i].y);
            }
            out << "\"/>\n";
        }
    }

    // supporting lines parallel to the displacement
    const std::int64_t m = walk.displacement()[0], n = walk.displacement()[1];
    if (m != 0 || n != 0) {
        std::int64_t cmax = 0, cmin = 0;
        std::size_t argmax = 0, argmin = 0;
        for (std::size_t i = 0; i <= len; ++i) {
            const std::int64_t c = m * walk.coord(i, 1) - n * walk.coord(i, 0);
            if (c > cmax) { cmax = c; argmax = i; }
            if (c < cmin) { cmin = c; argmin = i; }
        }
        const std::int64_t span = (maxx - minx) + (maxy - miny) + 2;
        const std::int64_t reach = span / std::max<std::int64_t>(1, std::max(std::llabs(m), std::llabs(n))) + 1;
        auto support_line = [&](std::size_t at) {
            const std::int64_t x = walk.coord(at, 0), y = walk.coord(at, 1);
            out << "<line class=\"support\" x1=\"" << sx(x - reach * m) << "\" y1=\""
                << sy(y - reach * n) << "\" x2=\"" << sx(x + reach * m) << "\" y2=\""
                << sy(y + reach * n) << "\"/>\n";
        };
        support_line(argmax);
        if (cmax != cmin) support_line(argmin);
    }

    // walk edges
    for (std::size_t i = 0; i < len; ++i) {
        out << "<line class=\"edge\" x1=\"" << sx(walk.coord(i, 0)) << "\" y1=\""
            << sy(walk.coord(i, 1)) << "\" x2=\"" << sx(walk.coord(i + 1, 0)) << "\" y2=\""
            << sy(walk.coord(i + 1, 1)) << "\"/>\n";
    }
    out << "<circle class=\"origin\" cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"6\"/>\n";

    // certificate highlight when the word itself is the evaluated core
    if (!w.empty() && w.is_cyclically_reduced()) {
        Verdict v = brown_criterion(w);
        if (v.kind == VerdictKind::AscendingHNN && v.brown) {
            const auto& wit = *v.brown;
            if (wit.is_edge) {
                out << "<line class=\"certificate\" x1=\"" << sx(walk.coord(wit.position, 0))
                    << "\" y1=\"" << sy(walk.coord(wit.position, 1)) << "\" x2=\""
                    << sx(walk.coord(wit.position + 1, 0)) << "\" y2=\""
                    << sy(walk.coord(wit.position + 1, 1)) << "\"/>\n";
            } else {
                out << "<circle class=\"certificate\" cx=\"" << sx(walk.coord(wit.position, 0))
                    << "\" cy=\"" << sy(walk.coord(wit.position, 1)) << "\" r=\"8\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace onerel
