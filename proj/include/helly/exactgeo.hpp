#pragma once

#include <optional>
#include <vector>

#include "helly/bigint.hpp"

namespace helly {

struct GridPoint {
    Int x, y;

    friend bool operator==(const GridPoint& a, const GridPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const GridPoint& a, const GridPoint& b) { return !(a == b); }
    // Lexicographic (x, y); the tie-break order used everywhere.
    friend bool operator<(const GridPoint& a, const GridPoint& b) {
        const int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
    }
};

// Sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear,
// -1 right turn. Exact.
int orientation(const GridPoint& p, const GridPoint& q, const GridPoint& r);

// A polygon in strictly convex position: counter-clockwise vertex order,
// no three collinear vertices, no repeats.
class Polygon {
  public:
    explicit Polygon(std::vector<GridPoint> ccw_vertices);

    const std::vector<GridPoint>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool is_vertex(const GridPoint& p) const;

    const Int& min_x() const { return min_x_; }
    const Int& max_x() const { return max_x_; }
    const Int& min_y() const { return min_y_; }
    const Int& max_y() const { return max_y_; }

  private:
    std::vector<GridPoint> verts_;
    std::vector<GridPoint> sorted_;
    Int min_x_, max_x_, min_y_, max_y_;
};

// Strict hull: CCW, starting at the lexicographic minimum; points interior
// to hull edges are not vertices. Throws DegenerateHullError when fewer than
// 3 distinct points remain or all input points are collinear.
Polygon convex_hull(const std::vector<GridPoint>& points);

// True iff the points are pairwise distinct and every one of them is a
// vertex of their convex hull.
bool is_strictly_convex_position(const std::vector<GridPoint>& points);

enum class Location { outside, boundary, interior };
Location point_in_polygon(const GridPoint& pt, const Polygon& poly);

// The closed interval {y : (x, y) in poly} as exact rationals, or nothing
// when the vertical line misses the polygon.
struct Section {
    Rat y_lo, y_hi;
};
std::optional<Section> cross_section(const Polygon& poly, const Int& x);

}  // namespace helly
