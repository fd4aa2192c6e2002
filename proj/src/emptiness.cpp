#include "helly/emptiness.hpp"

#include <algorithm>
#include <map>

#include "helly/detail/sieve.hpp"
#include "helly/errors.hpp"

namespace helly {

namespace {

Int require_param(const GridDescriptor& d, const char* name) {
    auto it = d.params.find(name);
    if (it == d.params.end()) {
        throw ParseError(std::string("grid descriptor missing parameter \"") + name + '"');
    }
    return int_from_decimal(it->second);
}

int require_int_param(const GridDescriptor& d, const char* name) {
    Int v = require_param(d, name);
    if (!v.fits_sint_p()) throw ParseError(std::string("parameter out of range: ") + name);
    return static_cast<int>(v.get_si());
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

struct BBox {
    Int min_x, max_x, min_y, max_y;
};

BBox bbox_of(const std::vector<GridPoint>& pts) {
    BBox b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const auto& p : pts) {
        if (p.x < b.min_x) b.min_x = p.x;
        if (p.x > b.max_x) b.max_x = p.x;
        if (p.y < b.min_y) b.min_y = p.y;
        if (p.y > b.max_y) b.max_y = p.y;
    }
    return b;
}

void require_points(const std::vector<GridPoint>& pts) {
    if (pts.size() < 3) throw UsageError("emptiness check needs at least 3 points");
}

}  // namespace

ProductGrid grid_from_sequence(const Sequence& s) {
    GridDescriptor d;
    Int lo, hi;
    switch (s.kind()) {
        case SeqKind::primes: {
            d.kind = "primes";
            d.params = s.params();
            if (auto it = s.params().find("limit"); it != s.params().end()) {
                lo = 2;
                hi = int_from_decimal(it->second);
            } else {
                lo = int_from_decimal(s.params().at("lo"));
                hi = int_from_decimal(s.params().at("hi"));
            }
            break;
        }
        case SeqKind::composites:
            d.kind = "composites";
            d.params = s.params();
            lo = int_from_decimal(s.params().at("lo"));
            hi = int_from_decimal(s.params().at("hi"));
            break;
        case SeqKind::exponential:
        case SeqKind::fibonacci:
        case SeqKind::doubly_exponential:
            d.kind = seq_kind_name(s.kind());
            d.params = s.params();
            lo = s.front();
            hi = s.back();
            break;
        case SeqKind::file:
        case SeqKind::custom:
            d.kind = "explicit";
            d.explicit_elements = s.elements();
            lo = s.front();
            hi = s.back();
            break;
    }
    return ProductGrid{s, std::move(lo), std::move(hi), std::move(d)};
}

ProductGrid grid_from_descriptor(const GridDescriptor& d) {
    if (d.kind == "primes") {
        if (d.params.count("limit")) {
            return ProductGrid{primes_up_to(require_param(d, "limit")), Int(2),
                               require_param(d, "limit"), d};
        }
        return ProductGrid{primes_in_range(require_param(d, "lo"), require_param(d, "hi")),
                           require_param(d, "lo"), require_param(d, "hi"), d};
    }
    if (d.kind == "composites") {
        return ProductGrid{
            composites_in_range(require_param(d, "lo"), require_param(d, "hi")),
            require_param(d, "lo"), require_param(d, "hi"), d};
    }
    if (d.kind == "exponential") {
        Sequence s = exponential(require_param(d, "base"), require_int_param(d, "count"));
        Int lo = s.front(), hi = s.back();
        return ProductGrid{std::move(s), std::move(lo), std::move(hi), d};
    }
    if (d.kind == "fibonacci") {
        Sequence s = fibonacci(require_int_param(d, "count"));
        Int lo = s.front(), hi = s.back();
        return ProductGrid{std::move(s), std::move(lo), std::move(hi), d};
    }
    if (d.kind == "doubly_exponential") {
        Sequence s =
            doubly_exponential(require_param(d, "base"), require_int_param(d, "count"));
        Int lo = s.front(), hi = s.back();
        return ProductGrid{std::move(s), std::move(lo), std::move(hi), d};
    }
    if (d.kind == "explicit") {
        if (d.explicit_elements.empty()) throw ParseError("explicit grid without elements");
        Sequence s(SeqKind::custom, {}, d.explicit_elements);
        Int lo = s.front(), hi = s.back();
        return ProductGrid{std::move(s), std::move(lo), std::move(hi), d};
    }
    if (d.kind == "int_minus_primes2") {
        throw UsageError("int_minus_primes2 is not a product grid");
    }
    throw UnknownGridKindError("unknown grid kind: \"" + d.kind + '"');
}

bool reports_agree(const EmptinessReport& a, const EmptinessReport& b) {
    return a.empty == b.empty && a.vertices_in_grid == b.vertices_in_grid &&
           a.convex_position == b.convex_position && a.violations == b.violations;
}

std::vector<GridPoint> construct_diagonal_polygon(const Sequence& seq, const RatioRun& run) {
    if (run.length < 4) throw UsageError("run length must be >= 4");
    if (run.start + run.length > seq.size()) {
        throw UsageError("run does not fit the sequence: [" + std::to_string(run.start) +
                         ", " + std::to_string(run.start + run.length) + ") vs " +
                         std::to_string(seq.size()) + " elements");
    }
    const std::size_t t = run.start;
    const std::size_t k = run.length;
    std::vector<GridPoint> pts;
    pts.reserve(k + 1);
    pts.push_back({seq.at(t), seq.at(t)});
    pts.push_back({seq.at(t + 1), seq.at(t + 1)});
    for (std::size_t i = t; i + 1 <= t + k - 1; ++i) {
        pts.push_back({seq.at(i), seq.at(i + 1)});
    }
    if (run.direction == RunDirection::increasing) {
        for (auto& p : pts) std::swap(p.x, p.y);
    }
    return pts;
}

namespace {

// Shared preamble of both product-grid verifiers. Returns true when the
// candidate survived the structural checks and section scanning may run.
bool verifier_preamble(const std::vector<GridPoint>& points, const ProductGrid& grid,
                       const BBox& box, EmptinessReport& report) {
    if (box.min_x < grid.lo || box.max_x > grid.hi || box.min_y < grid.lo ||
        box.max_y > grid.hi) {
        throw CoverageError("grid bounds [" + to_decimal(grid.lo) + ", " +
                            to_decimal(grid.hi) + "] do not cover the polygon");
    }
    report.vertices_in_grid = true;
    for (const auto& p : points) {
        if (!grid.factor.contains(p.x) || !grid.factor.contains(p.y)) {
            report.vertices_in_grid = false;
            break;
        }
    }
    report.convex_position = is_strictly_convex_position(points);
    return report.vertices_in_grid && report.convex_position;
}

}  // namespace

EmptinessReport verify_empty(const std::vector<GridPoint>& points, const ProductGrid& grid) {
    require_points(points);
    const BBox box = bbox_of(points);
    EmptinessReport report;
    if (!verifier_preamble(points, grid, box, report)) return report;

    const Polygon poly = convex_hull(points);
    const auto& elems = grid.factor.elements();
    for (std::size_t i = grid.factor.lower_bound(box.min_x);
         i < elems.size() && elems[i] <= box.max_x; ++i) {
        const Int& a = elems[i];
        const auto section = cross_section(poly, a);
        ++report.sections_checked;
        if (!section) continue;
        auto j = std::lower_bound(elems.begin(), elems.end(), section->y_lo,
                                  [](const Int& e, const Rat& v) { return cmp_int_rat(e, v) < 0; });
        for (; j != elems.end() && cmp_int_rat(*j, section->y_hi) <= 0; ++j) {
            const GridPoint pt{a, *j};
            if (poly.is_vertex(pt)) continue;
            const bool edge = a == box.min_x || a == box.max_x ||
                              cmp_int_rat(*j, section->y_lo) == 0 ||
                              cmp_int_rat(*j, section->y_hi) == 0;
            report.violations.push_back({pt, edge ? Location::boundary : Location::interior});
        }
    }
    report.empty = report.violations.empty();
    return report;
}

EmptinessReport verify_empty_bruteforce(const std::vector<GridPoint>& points,
                                        const ProductGrid& grid) {
    require_points(points);
    const BBox box = bbox_of(points);
    EmptinessReport report;
    if (!verifier_preamble(points, grid, box, report)) return report;

    const auto& elems = grid.factor.elements();
    const std::size_t x_begin = grid.factor.lower_bound(box.min_x);
    std::size_t x_end = x_begin;
    while (x_end < elems.size() && elems[x_end] <= box.max_x) ++x_end;
    const std::size_t y_begin = grid.factor.lower_bound(box.min_y);
    std::size_t y_end = y_begin;
    while (y_end < elems.size() && elems[y_end] <= box.max_y) ++y_end;

    const std::uint64_t population =
        static_cast<std::uint64_t>(x_end - x_begin) * (y_end - y_begin);
    if (population > kBruteForceCap) {
        throw ResourceError("brute-force population " + std::to_string(population) +
                            " exceeds cap " + std::to_string(kBruteForceCap));
    }

    const Polygon poly = convex_hull(points);
    for (std::size_t i = x_begin; i < x_end; ++i) {
        ++report.sections_checked;
        for (std::size_t j = y_begin; j < y_end; ++j) {
            const GridPoint pt{elems[i], elems[j]};
            const Location where = point_in_polygon(pt, poly);
            if (where == Location::outside || poly.is_vertex(pt)) continue;
            report.violations.push_back({pt, where});
        }
    }
    report.empty = report.violations.empty();
    return report;
}

EmptinessReport verify_empty_in_pointset(const std::vector<GridPoint>& points,
                                         const std::vector<GridPoint>& grid_points) {
    require_points(points);
    EmptinessReport report;
    report.vertices_in_grid = true;
    for (const auto& p : points) {
        if (!std::binary_search(grid_points.begin(), grid_points.end(), p)) {
            report.vertices_in_grid = false;
            break;
        }
    }
    report.convex_position = is_strictly_convex_position(points);
    if (!report.vertices_in_grid || !report.convex_position) return report;

    const Polygon poly = convex_hull(points);
    for (const auto& g : grid_points) {
        if (g.x < poly.min_x() || g.x > poly.max_x()) continue;
        const Location where = point_in_polygon(g, poly);
        if (where == Location::outside || poly.is_vertex(g)) continue;
        report.violations.push_back({g, where});
    }
    report.empty = report.violations.empty();
    return report;
}

namespace {

// Primality over a window of Int values, backed by one u64 sieve table.
class PrimeWindow {
  public:
    PrimeWindow(const Int& lo, const Int& hi) {
        Int from = lo < 0 ? Int(0) : lo;
        if (hi >= from) {
            if (!hi.fits_ulong_p()) {
                throw ResourceError("window endpoint beyond supported magnitude");
            }
            base_ = from.get_ui();
            table_ = detail::prime_table_u64(base_, hi.get_ui());
        }
    }

    bool is_prime(const Int& v) const {
        if (v < 2) return false;
        const unsigned long u = v.get_ui();
        return table_[u - base_] != 0;
    }

  private:
    std::uint64_t base_ = 0;
    std::vector<char> table_;
};

}  // namespace

EmptinessReport verify_empty_int_minus_primes2(const std::vector<GridPoint>& points,
                                               const Int& x_lo, const Int& x_hi,
                                               const Int& y_lo, const Int& y_hi) {
    require_points(points);
    const BBox box = bbox_of(points);
    if (box.min_x < x_lo || box.max_x > x_hi || box.min_y < y_lo || box.max_y > y_hi) {
        throw CoverageError("window does not cover the polygon");
    }
    const PrimeWindow xprimes(box.min_x, box.max_x);
    const PrimeWindow yprimes(box.min_y, box.max_y);

    EmptinessReport report;
    report.vertices_in_grid = true;
    for (const auto& p : points) {
        if (xprimes.is_prime(p.x) && yprimes.is_prime(p.y)) {
            report.vertices_in_grid = false;
            break;
        }
    }
    report.convex_position = is_strictly_convex_position(points);
    if (!report.vertices_in_grid || !report.convex_position) return report;

    const Polygon poly = convex_hull(points);
    std::uint64_t budget = kBruteForceCap;
    for (Int a = box.min_x; a <= box.max_x; a += 1) {
        const auto section = cross_section(poly, a);
        ++report.sections_checked;
        if (!section) continue;
        const bool a_prime = xprimes.is_prime(a);
        const Int b_lo = rat_ceil(section->y_lo);
        const Int b_hi = rat_floor(section->y_hi);
        for (Int b = b_lo; b <= b_hi; b += 1) {
            if (budget-- == 0) {
                throw ResourceError("column scan exceeds brute-force cap");
            }
            if (a_prime && yprimes.is_prime(b)) continue;  // not a grid point
            const GridPoint pt{a, b};
            if (poly.is_vertex(pt)) continue;
            const bool edge = a == box.min_x || a == box.max_x ||
                              cmp_int_rat(b, section->y_lo) == 0 ||
                              cmp_int_rat(b, section->y_hi) == 0;
            report.violations.push_back({pt, edge ? Location::boundary : Location::interior});
        }
    }
    report.empty = report.violations.empty();
    return report;
}

EmptinessCertificate make_certificate_with_descriptor(const std::vector<GridPoint>& points,
                                                      const GridDescriptor& descriptor,
                                                      const EmptinessReport& report) {
    if (!report.empty) {
        throw UsageError("refusing to certify: the emptiness report is not empty");
    }
    EmptinessCertificate cert;
    cert.version = 1;
    cert.grid = descriptor;
    cert.vertices = points;
    cert.method = "cross-section";
    cert.empty = true;
    cert.implied_helly_lower_bound = points.size();

    const Polygon hull = convex_hull(points);
    for (const auto& v : hull.vertices()) {
        const auto it = std::find(points.begin(), points.end(), v);
        cert.hull_ccw.push_back(static_cast<std::size_t>(it - points.begin()));
    }
    return cert;
}

EmptinessCertificate make_certificate(const std::vector<GridPoint>& points,
                                      const ProductGrid& grid,
                                      const EmptinessReport& report) {
    return make_certificate_with_descriptor(points, grid.descriptor, report);
}

bool verify_certificate(const EmptinessCertificate& cert) {
    if (cert.version != 1) {
        throw VersionMismatchError("certificate version " + std::to_string(cert.version) +
                                   " is not supported");
    }
    if (cert.method != "cross-section") {
        throw ParseError("unknown verification method tag: \"" + cert.method + '"');
    }
    if (!cert.empty) return false;
    const std::size_t n = cert.vertices.size();
    if (n < 3) return false;
    if (cert.implied_helly_lower_bound != n) return false;
    if (cert.hull_ccw.size() != n) return false;

    Polygon hull = [&]() -> Polygon {
        try {
            return convex_hull(cert.vertices);
        } catch (const DegenerateHullError&) {
            throw ParseError("certificate vertices are degenerate");
        }
    }();
    if (hull.size() != n) return false;
    std::vector<std::size_t> expected;
    expected.reserve(n);
    for (const auto& v : hull.vertices()) {
        const auto it = std::find(cert.vertices.begin(), cert.vertices.end(), v);
        expected.push_back(static_cast<std::size_t>(it - cert.vertices.begin()));
    }
    if (expected != cert.hull_ccw) return false;

    if (cert.grid.kind == "int_minus_primes2") {
        const Int x_lo = require_param(cert.grid, "x_lo");
        const Int x_hi = require_param(cert.grid, "x_hi");
        const Int y_lo = require_param(cert.grid, "y_lo");
        const Int y_hi = require_param(cert.grid, "y_hi");
        const auto columns = verify_empty_int_minus_primes2(cert.vertices, x_lo, x_hi, y_lo, y_hi);
        const auto pointset = verify_empty_in_pointset(
            cert.vertices, int_minus_primes2_points(x_lo, x_hi, y_lo, y_hi, kBruteForceCap));
        return columns.empty && pointset.empty && reports_agree(columns, pointset);
    }

    const ProductGrid grid = grid_from_descriptor(cert.grid);
    const auto report = verify_empty(cert.vertices, grid);
    if (!report.empty) return false;
    try {
        const auto brute = verify_empty_bruteforce(cert.vertices, grid);
        if (!brute.empty || !reports_agree(report, brute)) return false;
    } catch (const ResourceError&) {
        // Brute-force oracle beyond its population cap; the section
        // verifier's verdict stands on its own.
    }
    return true;
}

std::vector<GridPoint> int_minus_primes2_points(const Int& x_lo, const Int& x_hi,
                                                const Int& y_lo, const Int& y_hi,
                                                std::uint64_t cap) {
    if (x_lo > x_hi || y_lo > y_hi) throw UsageError("empty window range");
    const Int span_x = x_hi - x_lo + 1;
    const Int span_y = y_hi - y_lo + 1;
    if (span_x * span_y > Int(cap)) {
        throw ResourceError("window population exceeds cap " + std::to_string(cap));
    }
    const PrimeWindow xprimes(x_lo, x_hi);
    const PrimeWindow yprimes(y_lo, y_hi);
    std::vector<GridPoint> pts;
    for (Int a = x_lo; a <= x_hi; a += 1) {
        const bool a_prime = xprimes.is_prime(a);
        for (Int b = y_lo; b <= y_hi; b += 1) {
            if (a_prime && yprimes.is_prime(b)) continue;
            pts.push_back({a, b});
        }
    }
    return pts;
}

int flatness_vertex_bound(int f2) {
    if (f2 < 1) throw UsageError("flatness constant must be >= 1");
    return 8 * f2;
}

}  // namespace helly
