#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "helly/exactgeo.hpp"
#include "helly/gapscan.hpp"
#include "helly/seqgen.hpp"

namespace helly {

// How a grid is regenerated by an independent checker. Product grids carry
// the generating parameters, not the elements; "explicit" carries elements
// for sequences with no generating rule; "int_minus_primes2" is the
// non-product grid of integer pairs that are not both prime, in a window.
struct GridDescriptor {
    std::string kind;
    std::map<std::string, std::string> params;
    std::vector<Int> explicit_elements;

    friend bool operator==(const GridDescriptor&, const GridDescriptor&) = default;
};

// factor x factor, materialized over the declared bounds [lo, hi].
// Queries outside the bounds are coverage errors, never silent misses.
struct ProductGrid {
    Sequence factor;
    Int lo, hi;
    GridDescriptor descriptor;
};

ProductGrid grid_from_sequence(const Sequence& s);
ProductGrid grid_from_descriptor(const GridDescriptor& d);

struct Violation {
    GridPoint point;
    Location where = Location::interior;  // boundary or interior

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct EmptinessReport {
    bool empty = false;
    bool vertices_in_grid = false;
    bool convex_position = false;
    std::vector<Violation> violations;  // sorted lexicographically
    std::size_t sections_checked = 0;
};

// Agreement on everything except method-specific counters.
bool reports_agree(const EmptinessReport& a, const EmptinessReport& b);

// The near-diagonal polygon of a gap-ratio run: for a decreasing run on
// elements a_t..a_{t+k-1},
//   X = {(a_t,a_t), (a_{t+1},a_{t+1})} union {(a_i, a_{i+1}) : t <= i <= t+k-2},
// |X| = k+1. Increasing runs emit the reflection through y = x. The output
// is a candidate only; certification is verify_empty's job.
std::vector<GridPoint> construct_diagonal_polygon(const Sequence& seq, const RatioRun& run);

// Cross-section verifier: hulls the points, then walks every factor element
// in the x-range and checks that every factor element inside the closed
// vertical section is a polygon vertex.
EmptinessReport verify_empty(const std::vector<GridPoint>& points, const ProductGrid& grid);

// Independent oracle with the same contract: enumerates every grid point of
// the bounding box and classifies it with point_in_polygon.
EmptinessReport verify_empty_bruteforce(const std::vector<GridPoint>& points,
                                        const ProductGrid& grid);
constexpr std::uint64_t kBruteForceCap = 10000000;  // bounding-box population

// Emptiness relative to an explicit point set (sorted, distinct): used for
// window grids that are not products.
EmptinessReport verify_empty_in_pointset(const std::vector<GridPoint>& points,
                                         const std::vector<GridPoint>& grid_points);

// Column walker for the grid Z^2 minus (primes x primes) in a window:
// the cross-section route for the non-product grid.
EmptinessReport verify_empty_int_minus_primes2(const std::vector<GridPoint>& points,
                                               const Int& x_lo, const Int& x_hi,
                                               const Int& y_lo, const Int& y_hi);

// All points of the same grid inside the window, sorted lexicographically.
std::vector<GridPoint> int_minus_primes2_points(const Int& x_lo, const Int& x_hi,
                                                const Int& y_lo, const Int& y_hi,
                                                std::uint64_t cap);

struct SearchBlock {
    std::string strategy;
    std::string window;
    std::uint64_t nodes_explored = 0;
    std::uint64_t elapsed_ms = 0;

    friend bool operator==(const SearchBlock&, const SearchBlock&) = default;
};

// A self-contained, re-verifiable record of an empty polygon. Its vertex
// count is a lower bound on the Helly number of the grid it lives in.
struct EmptinessCertificate {
    int version = 1;
    GridDescriptor grid;
    std::vector<GridPoint> vertices;
    std::vector<std::size_t> hull_ccw;  // indices into `vertices`, CCW
    std::string method;
    bool empty = true;
    std::size_t implied_helly_lower_bound = 0;
    std::optional<SearchBlock> search;

    friend bool operator==(const EmptinessCertificate&, const EmptinessCertificate&) = default;
};

// Refuses reports that are not empty.
EmptinessCertificate make_certificate(const std::vector<GridPoint>& points,
                                      const ProductGrid& grid, const EmptinessReport& report);

// Same, for grids that are not products (window grids carry their own
// descriptor).
EmptinessCertificate make_certificate_with_descriptor(const std::vector<GridPoint>& points,
                                                      const GridDescriptor& descriptor,
                                                      const EmptinessReport& report);

// Regenerates the grid from the descriptor, re-runs both verifiers (the
// brute-force one when within cap) and rechecks the implied bound and hull
// order. True only if everything reproduces.
bool verify_certificate(const EmptinessCertificate& cert);

// Vertex bound for empty polygons in the complement grids, from the
// two-dimensional flatness constant f(2) = 3.
int flatness_vertex_bound(int f2);
constexpr int kFlatnessConstantDim2 = 3;
constexpr int kComplementVertexBound = 24;  // 8 * f(2)
// Sharper published constant via lattice width; recorded, not derived here.
constexpr int kComplementVertexBoundRefined = 18;

}  // namespace helly
