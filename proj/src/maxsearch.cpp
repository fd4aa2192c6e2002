#include "helly/maxsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "helly/detail/sieve.hpp"
#include "helly/errors.hpp"

namespace helly {

const char* strategy_name(Strategy s) {
    return s == Strategy::dp ? "dp" : "exhaustive";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "dp") return Strategy::dp;
    if (name == "exhaustive") return Strategy::exhaustive;
    throw ParseError("unknown strategy: \"" + name + '"');
}

std::string GridWindow::range_label() const {
    return "[" + to_decimal(x_lo) + "," + to_decimal(x_hi) + "]x[" + to_decimal(y_lo) +
           "," + to_decimal(y_hi) + "]";
}

namespace {

std::vector<GridPoint> product_points(const Sequence& factor, const Int& x_lo,
                                      const Int& x_hi, const Int& y_lo, const Int& y_hi,
                                      std::uint64_t cap) {
    const auto& e = factor.elements();
    const std::size_t xb = factor.lower_bound(x_lo);
    std::size_t xe = xb;
    while (xe < e.size() && e[xe] <= x_hi) ++xe;
    const std::size_t yb = factor.lower_bound(y_lo);
    std::size_t ye = yb;
    while (ye < e.size() && e[ye] <= y_hi) ++ye;

    const std::uint64_t population =
        static_cast<std::uint64_t>(xe - xb) * static_cast<std::uint64_t>(ye - yb);
    if (population > cap) {
        throw ResourceError("window population " + std::to_string(population) +
                            " exceeds cap " + std::to_string(cap));
    }
    std::vector<GridPoint> pts;
    pts.reserve(population);
    for (std::size_t i = xb; i < xe; ++i) {
        for (std::size_t j = yb; j < ye; ++j) pts.push_back({e[i], e[j]});
    }
    return pts;
}

void check_ranges(const Int& x_lo, const Int& x_hi, const Int& y_lo, const Int& y_hi) {
    if (x_lo > x_hi || y_lo > y_hi) throw UsageError("empty window range");
}

}  // namespace

GridWindow window_from_sequence(const Sequence& factor, const Int& x_lo, const Int& x_hi,
                                const Int& y_lo, const Int& y_hi, std::uint64_t cap) {
    check_ranges(x_lo, x_hi, y_lo, y_hi);
    GridWindow w;
    w.kind = WindowKind::product;
    w.product = grid_from_sequence(factor);
    w.descriptor = w.product->descriptor;
    w.x_lo = x_lo;
    w.x_hi = x_hi;
    w.y_lo = y_lo;
    w.y_hi = y_hi;
    w.points = product_points(factor, x_lo, x_hi, y_lo, y_hi, cap);
    return w;
}

GridWindow window_complement_product(const Int& x_lo, const Int& x_hi, const Int& y_lo,
                                     const Int& y_hi, std::uint64_t cap) {
    check_ranges(x_lo, x_hi, y_lo, y_hi);
    const Int lo = std::min(x_lo, y_lo);
    const Int hi = std::max(x_hi, y_hi);
    GridWindow w = window_from_sequence(composites_in_range(lo, hi), x_lo, x_hi, y_lo,
                                        y_hi, cap);
    w.kind = WindowKind::complement_product;
    return w;
}

GridWindow window_int_minus_primes2(const Int& x_lo, const Int& x_hi, const Int& y_lo,
                                    const Int& y_hi, std::uint64_t cap) {
    check_ranges(x_lo, x_hi, y_lo, y_hi);
    GridWindow w;
    w.kind = WindowKind::int_minus_primes2;
    w.descriptor.kind = "int_minus_primes2";
    w.descriptor.params = {{"x_lo", to_decimal(x_lo)},
                           {"x_hi", to_decimal(x_hi)},
                           {"y_lo", to_decimal(y_lo)},
                           {"y_hi", to_decimal(y_hi)}};
    w.x_lo = x_lo;
    w.x_hi = x_hi;
    w.y_lo = y_lo;
    w.y_hi = y_hi;
    w.points = int_minus_primes2_points(x_lo, x_hi, y_lo, y_hi, cap);
    return w;
}

namespace {

using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

constexpr i64 kCoordCap = static_cast<i64>(1) << 61;

struct P64 {
    i64 x, y;
};

inline i128 cross2(i64 ax, i64 ay, i64 bx, i64 by) {
    return static_cast<i128>(ax) * by - static_cast<i128>(ay) * bx;
}

inline u128 norm2(i64 x, i64 y) {
    return static_cast<u128>(static_cast<i128>(x) * x) +
           static_cast<u128>(static_cast<i128>(y) * y);
}

std::vector<GridPoint> canonical_ccw(const std::vector<GridPoint>& pts) {
    return convex_hull(pts).vertices();
}

// (count, canonical vertex list) with the deterministic total order used to
// merge results: more vertices first, then lexicographically smaller list.
struct BestPoly {
    std::size_t count = 0;
    std::vector<GridPoint> canonical;

    bool beaten_by(std::size_t c, const std::vector<GridPoint>& canon) const {
        if (c != count) return c > count;
        if (c == 0) return false;
        return std::lexicographical_compare(canon.begin(), canon.end(), canonical.begin(),
                                            canonical.end());
    }
};

// Largest empty convex subset, one anchor at a time. The anchor is the
// (y, x)-minimal vertex; candidates above it are sorted by angle. A chain
// dp over fan-empty edges extends convex chains; an edge (j, i) is usable
// when the closed triangle (anchor, j, i) contains no window point besides
// its corners, which the sweep decides with a single running constraint:
// the most counterclockwise blocker direction seen so far from j.
//
// C is the signed cross-product type, D the unsigned squared-distance type.
// Windows with coordinates within 2^29 run entirely in 64-bit arithmetic;
// wider ones fall back to 128-bit. Both are exact.
template <typename C, typename D>
class DpState {
  public:
    DpState(const std::vector<P64>& pts_yx, const std::vector<GridPoint>& originals,
            const std::vector<int>& yx_to_orig)
        : pts_(pts_yx), originals_(originals), yx_to_orig_(yx_to_orig) {}

    static C cross(i64 ax, i64 ay, i64 bx, i64 by) {
        return static_cast<C>(ax) * by - static_cast<C>(ay) * bx;
    }
    static D dist2(i64 x, i64 y) {
        return static_cast<D>(static_cast<C>(x) * x) + static_cast<D>(static_cast<C>(y) * y);
    }

    void run_anchor(int a, BestPoly& best, std::uint64_t& nodes) {
        const int n = static_cast<int>(pts_.size());
        const int m = n - a - 1;
        if (m < 2) return;
        const P64 b = pts_[a];

        order_.resize(m);
        for (int t = 0; t < m; ++t) order_[t] = a + 1 + t;
        ax_.resize(m);
        ay_.resize(m);
        // relative coordinates, then angular sort (ties: nearer first)
        std::sort(order_.begin(), order_.end(), [&](int u, int v) {
            const C c = cross(pts_[u].x - b.x, pts_[u].y - b.y, pts_[v].x - b.x,
                              pts_[v].y - b.y);
            if (c != 0) return c > 0;
            return dist2(pts_[u].x - b.x, pts_[u].y - b.y) <
                   dist2(pts_[v].x - b.x, pts_[v].y - b.y);
        });
        for (int t = 0; t < m; ++t) {
            ax_[t] = pts_[order_[t]].x - b.x;
            ay_[t] = pts_[order_[t]].y - b.y;
        }
        cand_.assign(m, 1);
        for (int t = 1; t < m; ++t) {
            if (cross(ax_[t - 1], ay_[t - 1], ax_[t], ay_[t]) == 0) cand_[t] = 0;
        }

        edges_.clear();
        for (int j = 0; j < m; ++j) {
            if (!cand_[j]) continue;
            int p = j + 1;
            // skip the rest of j's own ray; farther points on it can never
            // lie in a fan triangle over j
            while (p < m && cross(ax_[j], ay_[j], ax_[p], ay_[p]) == 0) ++p;
            bool have_q = false;
            i64 qx = 0, qy = 0;
            D qd2 = 0;
            std::uint64_t local_nodes = 0;
            for (; p < m; ++p) {
                const i64 ex = ax_[p] - ax_[j];
                const i64 ey = ay_[p] - ay_[j];
                ++local_nodes;
                C c = 0;
                if (have_q) c = cross(qx, qy, ex, ey);
                if (cand_[p]) {
                    const bool empty =
                        !have_q || c > 0 || (c == 0 && qd2 > dist2(ex, ey));
                    if (empty) {
                        edges_.push_back(static_cast<std::uint64_t>(p) << 32 |
                                         static_cast<std::uint32_t>(j));
                    }
                }
                if (!have_q || c > 0) {
                    qx = ex;
                    qy = ey;
                    qd2 = dist2(ex, ey);
                    have_q = true;
                } else if (c == 0) {
                    const D nd2 = dist2(ex, ey);
                    if (nd2 < qd2) {
                        qx = ex;
                        qy = ey;
                        qd2 = nd2;
                    }
                }
            }
            nodes += local_nodes;
        }
        if (edges_.empty()) return;

        std::sort(edges_.begin(), edges_.end());
        const int ecount = static_cast<int>(edges_.size());
        dp_.assign(ecount, 2);
        parent_.assign(ecount, -1);
        // in-edge ranges: edges sorted by (i, j), so the group ending at a
        // given vertex is contiguous
        in_begin_.assign(m + 1, 0);
        for (const std::uint64_t e : edges_) ++in_begin_[(e >> 32) + 1];
        for (int t = 0; t < m; ++t) in_begin_[t + 1] += in_begin_[t];

        int best_edge = -1;
        int best_len = 0;
        for (int e = 0; e < ecount; ++e) {
            const int i = static_cast<int>(edges_[e] >> 32);
            const int j = static_cast<int>(edges_[e] & 0xffffffffu);
            const i64 jix = ax_[i] - ax_[j];
            const i64 jiy = ay_[i] - ay_[j];
            int best_dp = 2;
            int par = -1;
            for (int f = in_begin_[j]; f < in_begin_[j + 1]; ++f) {
                if (dp_[f] + 1 <= best_dp) continue;
                const int t = static_cast<int>(edges_[f] & 0xffffffffu);
                // strict left turn at j
                if (cross(ax_[j] - ax_[t], ay_[j] - ay_[t], jix, jiy) > 0) {
                    best_dp = dp_[f] + 1;
                    par = f;
                }
            }
            dp_[e] = best_dp;
            parent_[e] = par;
            if (best_dp > best_len) {
                best_len = best_dp;
                best_edge = e;
            }
        }

        const std::size_t count = static_cast<std::size_t>(best_len) + 1;
        if (count < 3 || count < best.count) return;

        // reconstruct, canonicalize, and compare on ties
        std::vector<int> rev;
        rev.push_back(static_cast<int>(edges_[best_edge] >> 32));
        for (int e = best_edge; e != -1; e = parent_[e]) {
            rev.push_back(static_cast<int>(edges_[e] & 0xffffffffu));
        }
        std::vector<GridPoint> verts;
        verts.reserve(rev.size() + 1);
        verts.push_back(originals_[yx_to_orig_[a]]);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
            verts.push_back(originals_[yx_to_orig_[order_[*it]]]);
        }
        auto canon = canonical_ccw(verts);
        if (best.beaten_by(count, canon)) {
            best.count = count;
            best.canonical = std::move(canon);
        }
    }

  private:
    const std::vector<P64>& pts_;
    const std::vector<GridPoint>& originals_;
    const std::vector<int>& yx_to_orig_;

    std::vector<int> order_;
    std::vector<i64> ax_, ay_;
    std::vector<char> cand_;
    std::vector<std::uint64_t> edges_;
    std::vector<int> dp_, parent_, in_begin_;
};

template <typename C, typename D>
void run_anchors(const std::vector<P64>& pts_yx, const std::vector<GridPoint>& originals,
                 const std::vector<int>& yx_to_orig, int threads,
                 std::vector<BestPoly>& bests, std::vector<std::uint64_t>& node_counts) {
    const int n = static_cast<int>(pts_yx.size());
    std::atomic<int> next_anchor{0};
    auto work = [&](int tid) {
        DpState<C, D> state(pts_yx, originals, yx_to_orig);
        for (int a = next_anchor.fetch_add(1); a < n; a = next_anchor.fetch_add(1)) {
            state.run_anchor(a, bests[tid], node_counts[tid]);
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }
}

SearchResult dp_search(const GridWindow& window, const SearchOptions& options) {
    const std::size_t n = window.points.size();
    if (n > options.dp_cap) {
        throw ResourceError("window has " + std::to_string(n) +
                            " points, dp cap is " + std::to_string(options.dp_cap));
    }

    std::vector<P64> pts(n);
    i64 max_abs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const GridPoint& g = window.points[i];
        if (!g.x.fits_slong_p() || !g.y.fits_slong_p()) {
            throw ResourceError("window coordinate beyond dp range");
        }
        pts[i] = {g.x.get_si(), g.y.get_si()};
        if (pts[i].x <= -kCoordCap || pts[i].x >= kCoordCap || pts[i].y <= -kCoordCap ||
            pts[i].y >= kCoordCap) {
            throw ResourceError("window coordinate beyond dp range");
        }
        max_abs = std::max({max_abs, std::abs(pts[i].x), std::abs(pts[i].y)});
    }
    std::vector<int> yx_to_orig(n);
    for (std::size_t i = 0; i < n; ++i) yx_to_orig[i] = static_cast<int>(i);
    std::sort(yx_to_orig.begin(), yx_to_orig.end(), [&](int u, int v) {
        if (pts[u].y != pts[v].y) return pts[u].y < pts[v].y;
        return pts[u].x < pts[v].x;
    });
    std::vector<P64> pts_yx(n);
    for (std::size_t i = 0; i < n; ++i) pts_yx[i] = pts[yx_to_orig[i]];

    int threads = options.threads > 0 ? options.threads : detail::default_threads();
    threads = std::max(1, std::min<int>(threads, static_cast<int>(n) > 0 ? static_cast<int>(n) : 1));

    std::vector<BestPoly> bests(threads);
    std::vector<std::uint64_t> node_counts(threads, 0);
    if (max_abs < (static_cast<i64>(1) << 29)) {
        run_anchors<i64, std::uint64_t>(pts_yx, window.points, yx_to_orig, threads, bests,
                                        node_counts);
    } else {
        run_anchors<i128, u128>(pts_yx, window.points, yx_to_orig, threads, bests,
                                node_counts);
    }

    SearchResult result;
    result.strategy = Strategy::dp;
    BestPoly best;
    for (auto& b : bests) {
        if (best.beaten_by(b.count, b.canonical)) best = std::move(b);
    }
    for (std::uint64_t c : node_counts) result.nodes_explored += c;
    result.vertex_count = best.count;
    result.best = std::move(best.canonical);
    return result;
}

SearchResult exhaustive_search(const GridWindow& window, const SearchOptions& options) {
    const std::size_t n = window.points.size();
    if (n > options.exhaustive_cap) {
        throw ResourceError("window has " + std::to_string(n) +
                            " points, exhaustive cap is " +
                            std::to_string(options.exhaustive_cap));
    }
    if (n > 30) {
        throw ResourceError("exhaustive enumeration is limited to 30 points");
    }
    SearchResult result;
    result.strategy = Strategy::exhaustive;
    BestPoly best;
    std::vector<GridPoint> subset;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        ++result.nodes_explored;
        if (__builtin_popcount(mask) < 3) continue;
        subset.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) subset.push_back(window.points[i]);
        }
        if (!is_strictly_convex_position(subset)) continue;
        const Polygon hull = convex_hull(subset);
        bool empty = true;
        for (std::size_t i = 0; i < n && empty; ++i) {
            if (mask >> i & 1) continue;
            if (point_in_polygon(window.points[i], hull) != Location::outside) {
                empty = false;
            }
        }
        if (!empty) continue;
        if (best.beaten_by(subset.size(), hull.vertices())) {
            best.count = subset.size();
            best.canonical = hull.vertices();
        }
    }
    result.vertex_count = best.count;
    result.best = std::move(best.canonical);
    return result;
}

}  // namespace

SearchResult largest_empty_convex_polygon(const GridWindow& window,
                                          const SearchOptions& options) {
    if (window.points.empty()) throw UsageError("window is empty");
    const auto start = std::chrono::steady_clock::now();
    SearchResult result = options.strategy == Strategy::dp
                              ? dp_search(window, options)
                              : exhaustive_search(window, options);
    result.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());

    if (result.vertex_count >= 3) {
        const auto check = verify_empty_in_pointset(result.best, window.points);
        if (!check.empty) {
            throw Error("internal error: search produced an uncertified polygon");
        }
    }
    return result;
}

ProbeResult complement_bound_probe(const GridWindow& window, const SearchOptions& options) {
    if (window.kind == WindowKind::product) {
        throw UsageError("complement bound probe expects a complement-grid window");
    }
    ProbeResult probe;
    probe.search = largest_empty_convex_polygon(window, options);
    probe.bound = kComplementVertexBound;
    probe.within_bound =
        probe.search.vertex_count <= static_cast<std::size_t>(probe.bound);
    return probe;
}

EmptinessCertificate certificate_from_search(const GridWindow& window,
                                             const SearchResult& result) {
    if (result.vertex_count < 3) throw UsageError("no polygon to certify");
    EmptinessCertificate cert;
    if (window.kind == WindowKind::int_minus_primes2) {
        const auto report = verify_empty_int_minus_primes2(result.best, window.x_lo,
                                                           window.x_hi, window.y_lo,
                                                           window.y_hi);
        cert = make_certificate_with_descriptor(result.best, window.descriptor, report);
    } else {
        const auto report = verify_empty(result.best, *window.product);
        cert = make_certificate(result.best, *window.product, report);
    }
    cert.search = SearchBlock{strategy_name(result.strategy), window.range_label(),
                              result.nodes_explored, result.elapsed_ms};
    return cert;
}

}  // namespace helly
