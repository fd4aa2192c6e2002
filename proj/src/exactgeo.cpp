#include "helly/exactgeo.hpp"

#include <algorithm>

#include "helly/errors.hpp"

namespace helly {

int orientation(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
    const Int cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

Polygon::Polygon(std::vector<GridPoint> ccw_vertices) : verts_(std::move(ccw_vertices)) {
    const std::size_t n = verts_.size();
    if (n < 3) throw DegenerateHullError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]) <= 0) {
            throw DegenerateHullError(
                "vertices not in strictly convex counter-clockwise position");
        }
    }
    sorted_ = verts_;
    std::sort(sorted_.begin(), sorted_.end());
    if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
        throw DegenerateHullError("repeated polygon vertex");
    }
    min_x_ = max_x_ = verts_[0].x;
    min_y_ = max_y_ = verts_[0].y;
    for (const auto& v : verts_) {
        if (v.x < min_x_) min_x_ = v.x;
        if (v.x > max_x_) max_x_ = v.x;
        if (v.y < min_y_) min_y_ = v.y;
        if (v.y > max_y_) max_y_ = v.y;
    }
}

bool Polygon::is_vertex(const GridPoint& p) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), p);
}

Polygon convex_hull(const std::vector<GridPoint>& points) {
    std::vector<GridPoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) throw DegenerateHullError("hull needs at least 3 distinct points");

    // Monotone chain, strict turns only: collinear points are demoted.
    std::vector<GridPoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower_end && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    if (hull.size() < 3) throw DegenerateHullError("all points collinear");
    return Polygon(std::move(hull));
}

bool is_strictly_convex_position(const std::vector<GridPoint>& points) {
    if (points.size() < 3) return false;
    std::vector<GridPoint> distinct = points;
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) {
        return false;
    }
    try {
        return convex_hull(distinct).size() == distinct.size();
    } catch (const DegenerateHullError&) {
        return false;
    }
}

Location point_in_polygon(const GridPoint& pt, const Polygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    bool on_edge_line = false;
    for (std::size_t i = 0; i < n; ++i) {
        const int o = orientation(v[i], v[(i + 1) % n], pt);
        if (o < 0) return Location::outside;
        if (o == 0) on_edge_line = true;
    }
    // Inside all closed half-planes; for a strictly convex polygon a
    // supporting line meets it exactly in the corresponding edge.
    return on_edge_line ? Location::boundary : Location::interior;
}

std::optional<Section> cross_section(const Polygon& poly, const Int& x) {
    if (x < poly.min_x() || x > poly.max_x()) return std::nullopt;
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    bool have = false;
    Rat lo, hi;
    auto consider = [&](const Rat& y) {
        if (!have) {
            lo = hi = y;
            have = true;
        } else if (y < lo) {
            lo = y;
        } else if (y > hi) {
            hi = y;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const GridPoint& a = v[i];
        const GridPoint& b = v[(i + 1) % n];
        if (a.x == b.x) {
            if (a.x == x) {
                consider(Rat(a.y));
                consider(Rat(b.y));
            }
            continue;
        }
        const Int& x0 = a.x < b.x ? a.x : b.x;
        const Int& x1 = a.x < b.x ? b.x : a.x;
        if (x < x0 || x > x1) continue;
        // y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x), exactly.
        Rat y(a.y);
        y += Rat(b.y - a.y) * Rat(x - a.x) / Rat(b.x - a.x);
        consider(y);
    }
    if (!have) return std::nullopt;
    return Section{lo, hi};
}

}  // namespace helly
