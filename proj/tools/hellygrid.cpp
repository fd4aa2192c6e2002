// hellygrid: sieve -> scan -> construct -> verify -> certify -> search for
// empty convex polygons in product grids, with machine-checkable
// Helly-lower-bound certificates.
//
// Exit codes: 0 success/verified, 1 checked-and-false, 2 usage or format
// error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "helly/certificate_io.hpp"
#include "helly/detail/sieve.hpp"
#include "helly/emptiness.hpp"
#include "helly/errors.hpp"
#include "helly/maxsearch.hpp"

using namespace helly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct SeqFlags {
    std::string spec = "primes";
    std::string limit;
    std::string lo;
    std::string hi;
    int count = 0;
};

void add_seq_flags(CLI::App* cmd, SeqFlags& f) {
    cmd->add_option("--seq", f.spec,
                    "sequence spec: primes, comp, exp:B, fib, dexp:B, file:PATH")
        ->capture_default_str();
    cmd->add_option("--limit", f.limit, "upper limit (primes)");
    cmd->add_option("--lo", f.lo, "range start (primes, comp)");
    cmd->add_option("--hi", f.hi, "range end (primes, comp)");
    cmd->add_option("--count", f.count, "element count (exp, fib, dexp)");
}

Sequence build_sequence(const SeqFlags& f) {
    const std::string& spec = f.spec;
    if (spec == "primes") {
        if (!f.limit.empty()) return primes_up_to(int_from_decimal(f.limit));
        if (!f.lo.empty() && !f.hi.empty()) {
            return primes_in_range(int_from_decimal(f.lo), int_from_decimal(f.hi));
        }
        throw UsageError("primes need --limit or --lo/--hi");
    }
    if (spec == "comp" || spec == "composites") {
        if (f.hi.empty()) throw UsageError("comp needs --hi (and optionally --lo)");
        const Int lo = f.lo.empty() ? Int(0) : int_from_decimal(f.lo);
        return composites_in_range(lo, int_from_decimal(f.hi));
    }
    if (spec == "fib") {
        if (f.count < 1) throw UsageError("fib needs --count");
        return fibonacci(f.count);
    }
    if (spec.rfind("exp:", 0) == 0) {
        if (f.count < 1) throw UsageError("exp:B needs --count");
        return exponential(int_from_decimal(spec.substr(4)), f.count);
    }
    if (spec.rfind("dexp:", 0) == 0) {
        if (f.count < 1) throw UsageError("dexp:B needs --count");
        return doubly_exponential(int_from_decimal(spec.substr(5)), f.count);
    }
    if (spec.rfind("file:", 0) == 0) return sequence_from_file(spec.substr(5));
    throw UsageError("unknown sequence spec: \"" + spec + '"');
}

// "-" means stdout
class OutStream {
  public:
    explicit OutStream(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::pair<Int, Int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("window must be LO:HI, got \"" + text + '"');
    }
    Int lo = int_from_decimal(text.substr(0, colon));
    Int hi = int_from_decimal(text.substr(colon + 1));
    if (lo > hi) throw UsageError("inverted window " + text);
    return {std::move(lo), std::move(hi)};
}

int cmd_sieve(const SeqFlags& flags, const std::string& out) {
    SeqFlags f = flags;
    f.spec = "primes";
    const Sequence s = build_sequence(f);
    OutStream os(out);
    write_sequence(s, os.get());
    std::cerr << s.size() << " primes written\n";
    return kExitOk;
}

int cmd_scan(const SeqFlags& flags, const std::string& direction, std::size_t min_run,
             const std::string& format, const std::string& out) {
    if (min_run < 4) throw UsageError("--min-run must be at least 4");
    const Sequence s = build_sequence(flags);
    const RunDirection dir = direction_from_name(direction);
    const auto runs = scan_runs(s, dir, min_run);
    OutStream os(out);
    if (format == "jsonl") {
        for (const auto& r : runs) os.get() << run_to_json_line(s, r) << '\n';
    } else if (format == "csv") {
        os.get() << run_csv_header() << '\n';
        for (const auto& r : runs) os.get() << run_to_csv_line(s, r) << '\n';
    } else {
        throw UsageError("unknown format: \"" + format + '"');
    }
    std::cerr << runs.size() << " runs of length >= " << min_run << " ("
              << direction_name(dir) << ") in " << s.label() << "\n";
    return kExitOk;
}

int cmd_construct(const SeqFlags& flags, std::size_t start, std::size_t k,
                  const std::string& direction, const std::string& cert_out) {
    const Sequence s = build_sequence(flags);
    const RunDirection dir = direction_from_name(direction);

    const RunValidation check = validate_run(s, start, k, dir);
    if (check.reversal_at) {
        std::cerr << "ratio condition fails: comparison at index " << *check.reversal_at
                  << " is a strict reversal of the " << direction_name(dir)
                  << " claim; refusing to construct\n";
        return kExitFalse;
    }
    if (check.equal_at) {
        std::cerr << "warning: ratio comparison at index " << *check.equal_at
                  << " is an equality; candidate will fail strict convex position\n";
    }

    const RatioRun run{start, k, dir};
    const auto points = construct_diagonal_polygon(s, run);
    const ProductGrid grid = grid_from_sequence(s);
    const auto report = verify_empty(points, grid);

    if (!report.convex_position) {
        std::cerr << "candidate rejected: points not in strictly convex position\n";
        return kExitFalse;
    }
    if (!report.vertices_in_grid) {
        std::cerr << "candidate rejected: a vertex is not a grid point\n";
        return kExitFalse;
    }
    if (!report.empty) {
        std::cerr << "candidate rejected: " << report.violations.size()
                  << " grid point(s) inside the polygon\n";
        for (const auto& v : report.violations) {
            std::cerr << "  (" << to_decimal(v.point.x) << ", " << to_decimal(v.point.y)
                      << ") " << (v.where == Location::boundary ? "boundary" : "interior")
                      << '\n';
        }
        return kExitFalse;
    }

    try {
        const auto brute = verify_empty_bruteforce(points, grid);
        if (!brute.empty || !reports_agree(report, brute)) {
            std::cerr << "verifier disagreement; refusing to certify\n";
            return kExitFalse;
        }
    } catch (const ResourceError&) {
        std::cerr << "note: brute-force cross-check skipped (population cap)\n";
    }

    const auto cert = make_certificate(points, grid, report);
    OutStream os(cert_out);
    os.get() << certificate_to_json(cert) << '\n';
    std::cerr << "certified empty " << cert.implied_helly_lower_bound
              << "-gon: h >= " << cert.implied_helly_lower_bound << " for "
              << s.label() << " squared\n";
    return kExitOk;
}

int cmd_verify(const std::string& path) {
    const EmptinessCertificate cert = load_certificate(path);
    if (verify_certificate(cert)) {
        std::cerr << "certificate OK: empty " << cert.vertices.size()
                  << "-gon, implied Helly lower bound " << cert.implied_helly_lower_bound
                  << '\n';
        return kExitOk;
    }
    std::cerr << "certificate INVALID\n";
    // best effort at explaining why
    try {
        if (cert.grid.kind == "int_minus_primes2") {
            const auto rep = verify_empty_int_minus_primes2(
                cert.vertices, int_from_decimal(cert.grid.params.at("x_lo")),
                int_from_decimal(cert.grid.params.at("x_hi")),
                int_from_decimal(cert.grid.params.at("y_lo")),
                int_from_decimal(cert.grid.params.at("y_hi")));
            for (const auto& v : rep.violations) {
                std::cerr << "  violation: (" << to_decimal(v.point.x) << ", "
                          << to_decimal(v.point.y) << ") "
                          << (v.where == Location::boundary ? "boundary" : "interior")
                          << '\n';
            }
            if (!rep.vertices_in_grid) std::cerr << "  a vertex is not a grid point\n";
            if (!rep.convex_position) std::cerr << "  not in strictly convex position\n";
        } else {
            const auto rep = verify_empty(cert.vertices, grid_from_descriptor(cert.grid));
            for (const auto& v : rep.violations) {
                std::cerr << "  violation: (" << to_decimal(v.point.x) << ", "
                          << to_decimal(v.point.y) << ") "
                          << (v.where == Location::boundary ? "boundary" : "interior")
                          << '\n';
            }
            if (!rep.vertices_in_grid) std::cerr << "  a vertex is not a grid point\n";
            if (!rep.convex_position) std::cerr << "  not in strictly convex position\n";
        }
    } catch (const Error&) {
        // diagnostics only
    }
    return kExitFalse;
}

int cmd_search(const SeqFlags& flags, const std::string& grid_spec,
               const std::string& window, const std::string& window_y,
               const std::string& strategy, std::size_t dp_cap, std::size_t exhaustive_cap,
               std::uint64_t window_cap, int threads, const std::string& cert_out) {
    const auto [x_lo, x_hi] = parse_range(window);
    const auto [y_lo, y_hi] = window_y.empty() ? parse_range(window) : parse_range(window_y);

    GridWindow w = [&]() {
        if (grid_spec == "comp" || grid_spec == "composites") {
            return window_complement_product(x_lo, x_hi, y_lo, y_hi, window_cap);
        }
        if (grid_spec == "int-minus-primes2") {
            return window_int_minus_primes2(x_lo, x_hi, y_lo, y_hi, window_cap);
        }
        if (grid_spec == "primes") {
            const Int lo = std::max(Int(2), std::min(x_lo, y_lo));
            const Int hi = std::max(x_hi, y_hi);
            return window_from_sequence(primes_in_range(lo, hi), x_lo, x_hi, y_lo, y_hi,
                                        window_cap);
        }
        SeqFlags f = flags;
        f.spec = grid_spec;
        return window_from_sequence(build_sequence(f), x_lo, x_hi, y_lo, y_hi, window_cap);
    }();

    SearchOptions opts;
    opts.strategy = strategy_from_name(strategy);
    opts.dp_cap = dp_cap;
    opts.exhaustive_cap = exhaustive_cap;
    opts.threads = threads;

    const bool complement =
        w.kind == WindowKind::complement_product || w.kind == WindowKind::int_minus_primes2;
    SearchResult result;
    bool within_bound = true;
    if (complement) {
        const ProbeResult probe = complement_bound_probe(w, opts);
        result = probe.search;
        within_bound = probe.within_bound;
        std::cerr << "complement probe: " << result.vertex_count
                  << " vertices, bound " << probe.bound << '\n';
    } else {
        result = largest_empty_convex_polygon(w, opts);
    }

    std::cerr << "window " << w.range_label() << ": " << w.points.size() << " points, best "
              << result.vertex_count << " vertices (" << strategy_name(result.strategy)
              << ", " << result.nodes_explored << " nodes, " << result.elapsed_ms
              << " ms)\n";

    if (result.vertex_count >= 3) {
        const auto cert = certificate_from_search(w, result);
        OutStream os(cert_out);
        os.get() << certificate_to_json(cert) << '\n';
    } else {
        std::cerr << "no polygon in this window\n";
    }

    if (!within_bound) {
        std::cerr << "CRITICAL: search exceeded the flatness vertex bound "
                  << kComplementVertexBound << "; this contradicts the complement-grid "
                  << "theory and must be investigated\n";
        return kExitFalse;
    }
    return kExitOk;
}

int cmd_admissible(const std::vector<std::string>& values, const std::string& dexp_base,
                   int dexp_count) {
    std::vector<Int> set;
    if (!dexp_base.empty()) {
        if (dexp_count < 1) throw UsageError("--doubly-exp needs BASE COUNT");
        set = doubly_exponential(int_from_decimal(dexp_base), dexp_count).elements();
    } else {
        for (const auto& v : values) set.push_back(int_from_decimal(v));
        if (set.empty()) throw UsageError("no values given");
    }
    const auto report = is_admissible(set);
    if (report.admissible) {
        std::cout << "admissible (" << set.size() << " values)\n";
        for (const auto& [p, witness] : report.witnesses) {
            std::cout << "  mod " << p << ": residue " << witness << " is missed\n";
        }
        std::cout << "  " << report.reduction_note << '\n';
        return kExitOk;
    }
    std::cout << "not admissible: all residues covered mod " << *report.violating_prime
              << '\n';
    return kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"empty convex polygons in product grids, with verifiable "
                 "Helly-lower-bound certificates"};
    app.require_subcommand(1);

    // sieve
    auto* sieve = app.add_subcommand("sieve", "generate primes (sequence file format)");
    SeqFlags sieve_flags;
    std::string sieve_out = "-";
    sieve->add_option("--limit", sieve_flags.limit, "sieve primes up to this limit");
    sieve->add_option("--lo", sieve_flags.lo, "range start");
    sieve->add_option("--hi", sieve_flags.hi, "range end");
    sieve->add_option("--out", sieve_out, "output path, - for stdout");

    // scan
    auto* scan = app.add_subcommand("scan", "scan a sequence for monotone gap-ratio runs");
    SeqFlags scan_flags;
    std::string scan_direction = "decreasing";
    std::size_t scan_min_run = 4;
    std::string scan_format = "jsonl";
    std::string scan_out = "-";
    add_seq_flags(scan, scan_flags);
    scan->add_option("--direction", scan_direction, "decreasing | increasing")
        ->capture_default_str();
    scan->add_option("--min-run", scan_min_run, "minimum run length (>= 4)")
        ->capture_default_str();
    scan->add_option("--format", scan_format, "jsonl | csv")->capture_default_str();
    scan->add_option("--out", scan_out, "output path, - for stdout");

    // construct
    auto* construct = app.add_subcommand(
        "construct", "build and certify the near-diagonal polygon of a run");
    SeqFlags con_flags;
    std::size_t con_start = 0;
    std::size_t con_k = 0;
    std::string con_direction = "decreasing";
    std::string con_cert_out = "-";
    add_seq_flags(construct, con_flags);
    construct->add_option("--start", con_start, "run start index (0-based)")->required();
    construct->add_option("--k", con_k, "run length in elements (>= 4)")->required();
    construct->add_option("--direction", con_direction, "decreasing | increasing")
        ->capture_default_str();
    construct->add_option("--cert-out", con_cert_out, "certificate path, - for stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "re-verify a certificate from scratch");
    std::string verify_path;
    verify->add_option("certificate", verify_path, "certificate JSON path")->required();

    // search
    auto* search = app.add_subcommand(
        "search", "largest empty convex polygon in a grid window");
    SeqFlags search_flags;
    std::string search_grid = "primes";
    std::string search_window;
    std::string search_window_y;
    std::string search_strategy = "dp";
    std::size_t search_dp_cap = kDpPointCap;
    std::size_t search_exhaustive_cap = kExhaustivePointCap;
    std::uint64_t search_window_cap = kWindowPopulationCap;
    int search_threads = 0;
    std::string search_cert_out = "-";
    search->add_option("--grid", search_grid,
                       "primes | comp | int-minus-primes2 | exp:B | fib | dexp:B | file:PATH")
        ->capture_default_str();
    search->add_option("--window", search_window, "x range LO:HI")->required();
    search->add_option("--window-y", search_window_y, "y range LO:HI (default: --window)");
    search->add_option("--strategy", search_strategy, "dp | exhaustive")
        ->capture_default_str();
    search->add_option("--dp-cap", search_dp_cap, "dp point cap")->capture_default_str();
    search->add_option("--exhaustive-cap", search_exhaustive_cap,
                       "exhaustive point cap (hard limit 30)")
        ->capture_default_str();
    search->add_option("--window-cap", search_window_cap, "window population cap")
        ->capture_default_str();
    search->add_option("--threads", search_threads, "worker threads (0 = auto)");
    search->add_option("--cert-out", search_cert_out, "certificate path, - for stdout");
    search->add_option("--limit", search_flags.limit, "factor limit (sequence grids)");
    search->add_option("--count", search_flags.count, "factor count (exp, fib, dexp)");

    // admissible
    auto* adm = app.add_subcommand("admissible", "test a set for admissibility");
    std::vector<std::string> adm_values;
    std::string adm_dexp_base;
    int adm_dexp_count = 0;
    adm->add_option("values", adm_values, "integers (decimal)");
    auto* dexp_opt = adm->add_option("--doubly-exp", [&](const std::vector<std::string>& v) {
        adm_dexp_base = v.at(0);
        adm_dexp_count = std::stoi(v.at(1));
        return true;
    }, "test the set base^(2^i), i = 1..count");
    dexp_opt->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sieve->parsed()) return cmd_sieve(sieve_flags, sieve_out);
        if (scan->parsed()) {
            return cmd_scan(scan_flags, scan_direction, scan_min_run, scan_format, scan_out);
        }
        if (construct->parsed()) {
            return cmd_construct(con_flags, con_start, con_k, con_direction, con_cert_out);
        }
        if (verify->parsed()) return cmd_verify(verify_path);
        if (search->parsed()) {
            return cmd_search(search_flags, search_grid, search_window, search_window_y,
                              search_strategy, search_dp_cap, search_exhaustive_cap,
                              search_window_cap, search_threads, search_cert_out);
        }
        if (adm->parsed()) return cmd_admissible(adm_values, adm_dexp_base, adm_dexp_count);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
