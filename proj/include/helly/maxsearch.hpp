#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "helly/emptiness.hpp"

namespace helly {

enum class WindowKind { product, complement_product, int_minus_primes2 };
enum class Strategy { dp, exhaustive };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// A finite search universe: the grid members inside [x_lo,x_hi] x [y_lo,y_hi],
// materialized and sorted lexicographically.
struct GridWindow {
    WindowKind kind = WindowKind::product;
    std::optional<ProductGrid> product;  // engaged for product-style windows
    GridDescriptor descriptor;
    Int x_lo, x_hi, y_lo, y_hi;
    std::vector<GridPoint> points;

    std::string range_label() const;
};

constexpr std::uint64_t kWindowPopulationCap = 2000000;
constexpr std::size_t kDpPointCap = 5000;
constexpr std::size_t kExhaustivePointCap = 16;

// Product window A x A restricted to the ranges; the factor sequence must
// span both ranges (elements outside are simply not in the window).
GridWindow window_from_sequence(const Sequence& factor, const Int& x_lo, const Int& x_hi,
                                const Int& y_lo, const Int& y_hi,
                                std::uint64_t cap = kWindowPopulationCap);

// (Z \ P)^2: product of the non-primes spanning the ranges.
GridWindow window_complement_product(const Int& x_lo, const Int& x_hi, const Int& y_lo,
                                     const Int& y_hi,
                                     std::uint64_t cap = kWindowPopulationCap);

// Z^2 \ P^2: integer pairs that are not both prime.
GridWindow window_int_minus_primes2(const Int& x_lo, const Int& x_hi, const Int& y_lo,
                                    const Int& y_hi,
                                    std::uint64_t cap = kWindowPopulationCap);

struct SearchOptions {
    Strategy strategy = Strategy::dp;
    std::size_t dp_cap = kDpPointCap;
    std::size_t exhaustive_cap = kExhaustivePointCap;
    int threads = 0;  // 0 = HELLY_GRID_THREADS / hardware default
};

struct SearchResult {
    // CCW from the lexicographic minimum; empty when the window admits no
    // polygon at all.
    std::vector<GridPoint> best;
    std::size_t vertex_count = 0;
    Strategy strategy = Strategy::dp;
    std::uint64_t nodes_explored = 0;
    std::uint64_t elapsed_ms = 0;
};

// Maximum-vertex empty convex polygon: the closed hull of the result
// contains no window point besides its vertices. Ties break to the
// lexicographically smallest canonical vertex list, so parallel and serial
// runs return identical results.
SearchResult largest_empty_convex_polygon(const GridWindow& window,
                                          const SearchOptions& options = {});

// Same search on a complement-grid window, plus the vertex-count assertion
// against the flatness bound 8*f(2) = 24. A violation would be a critical
// finding; it is reported, never silently dropped.
struct ProbeResult {
    SearchResult search;
    int bound = kComplementVertexBound;
    bool within_bound = true;
};
ProbeResult complement_bound_probe(const GridWindow& window,
                                   const SearchOptions& options = {});

// Certificate for a search result, verified against the window's grid.
EmptinessCertificate certificate_from_search(const GridWindow& window,
                                             const SearchResult& result);

}  // namespace helly
