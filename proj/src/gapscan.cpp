#include "helly/gapscan.hpp"

#include <algorithm>

#include "helly/detail/sieve.hpp"
#include "helly/errors.hpp"

namespace helly {

const char* direction_name(RunDirection d) {
    return d == RunDirection::decreasing ? "decreasing" : "increasing";
}

RunDirection direction_from_name(const std::string& name) {
    if (name == "decreasing") return RunDirection::decreasing;
    if (name == "increasing") return RunDirection::increasing;
    throw ParseError("unknown direction: \"" + name + "\"");
}

std::vector<Int> gaps(const Sequence& seq) {
    if (seq.size() < 2) throw UsageError("gaps need at least 2 elements");
    std::vector<Int> out;
    out.reserve(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        out.push_back(seq.at(i + 1) - seq.at(i));
    }
    return out;
}

Ordering ratio_compare(const Int& g0, const Int& g1, const Int& g2) {
    const int c = cmp(g2 * g0, g1 * g1);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

namespace {

// Comparison index i uses elements i..i+3; valid for i in [0, n-4].
Ordering compare_at(const std::vector<Int>& e, std::size_t i, Int& lhs, Int& rhs) {
    // lhs = (e[i+3]-e[i+2])*(e[i+1]-e[i]), rhs = (e[i+2]-e[i+1])^2
    lhs = (e[i + 3] - e[i + 2]) * (e[i + 1] - e[i]);
    rhs = e[i + 2] - e[i + 1];
    rhs *= rhs;
    const int c = cmp(lhs, rhs);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

}  // namespace

std::vector<RatioRun> scan_runs(const Sequence& seq, RunDirection direction,
                                std::size_t min_length) {
    if (min_length < 4) throw UsageError("min run length is 4");
    std::vector<RatioRun> out;
    if (seq.size() < 4) return out;

    const Ordering target =
        direction == RunDirection::decreasing ? Ordering::Less : Ordering::Greater;
    const auto& e = seq.elements();
    const std::size_t ncmp = seq.size() - 3;

    Int lhs, rhs;
    std::size_t block_start = 0;
    bool in_block = false;
    for (std::size_t i = 0; i <= ncmp; ++i) {
        const bool hit = i < ncmp && compare_at(e, i, lhs, rhs) == target;
        if (hit && !in_block) {
            block_start = i;
            in_block = true;
        } else if (!hit && in_block) {
            // Comparisons [block_start, i) hold; they span elements
            // block_start .. i+2, i.e. a run of length (i - block_start) + 3.
            const std::size_t len = (i - block_start) + 3;
            if (len >= min_length) out.push_back({block_start, len, direction});
            in_block = false;
        }
    }
    return out;
}

RunValidation validate_run(const Sequence& seq, std::size_t start, std::size_t length,
                           RunDirection direction) {
    if (length < 4) throw UsageError("run length must be >= 4");
    if (start + length > seq.size()) {
        throw UsageError("run [" + std::to_string(start) + ", " +
                         std::to_string(start + length) + ") does not fit a sequence of " +
                         std::to_string(seq.size()) + " elements");
    }
    const Ordering target =
        direction == RunDirection::decreasing ? Ordering::Less : Ordering::Greater;
    const Ordering opposite =
        direction == RunDirection::decreasing ? Ordering::Greater : Ordering::Less;

    RunValidation v;
    Int lhs, rhs;
    for (std::size_t i = start; i + 4 <= start + length; ++i) {
        const Ordering c = compare_at(seq.elements(), i, lhs, rhs);
        if (c == target) continue;
        if (c == opposite && !v.reversal_at) v.reversal_at = i;
        if (c == Ordering::Equal && !v.equal_at) v.equal_at = i;
    }
    return v;
}

AdmissibilityReport is_admissible(const std::vector<Int>& values) {
    if (values.empty()) throw UsageError("admissibility needs a nonempty set");
    {
        std::vector<Int> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw UsageError("admissibility set has duplicate values");
        }
    }

    AdmissibilityReport report;
    const std::uint64_t m = values.size();
    report.reduction_note =
        "primes p > " + std::to_string(m) + " skipped: " + std::to_string(m) +
        " distinct residues cannot cover p residue classes";

    const auto table = detail::prime_table_u64(0, m);
    for (std::uint64_t p = 2; p <= m; ++p) {
        if (!table[p]) continue;
        report.max_prime_tested = p;
        std::vector<char> hit(p, 0);
        std::uint64_t covered = 0;
        for (const Int& v : values) {
            const std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), p);
            if (!hit[r]) {
                hit[r] = 1;
                ++covered;
            }
        }
        if (covered == p) {
            report.admissible = false;
            report.witnesses.clear();
            report.violating_prime = p;
            return report;
        }
        for (std::uint64_t r = 0; r < p; ++r) {
            if (!hit[r]) {
                report.witnesses[p] = r;
                break;
            }
        }
    }
    report.admissible = true;
    return report;
}

bool check_doubly_exponential_convexity(const Int& base, const std::vector<int>& indices) {
    if (base < 2) throw UsageError("base must be >= 2");
    if (indices.size() < 4) {
        throw UsageError("need at least 4 indices to witness a ratio comparison");
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1) throw UsageError("indices must be >= 1");
        if (indices[i] > kDoublyExpCountCap) {
            throw ResourceError("index beyond doubly exponential cap");
        }
        if (i > 0 && indices[i - 1] >= indices[i]) {
            throw UsageError("indices must be strictly increasing");
        }
    }
    std::vector<Int> e;
    e.reserve(indices.size());
    for (int r : indices) e.push_back(pow_int(base, 1ul << r));
    for (std::size_t i = 0; i + 3 < e.size(); ++i) {
        const Int g0 = e[i + 1] - e[i];
        const Int g1 = e[i + 2] - e[i + 1];
        const Int g2 = e[i + 3] - e[i + 2];
        if (ratio_compare(g0, g1, g2) != Ordering::Greater) return false;
    }
    return true;
}

std::string run_to_json_line(const Sequence& seq, const RatioRun& run) {
    return "{\"start\": " + std::to_string(run.start) +
           ", \"length\": " + std::to_string(run.length) + ", \"direction\": \"" +
           direction_name(run.direction) + "\", \"first_element\": \"" +
           to_decimal(seq.at(run.start)) + "\", \"last_element\": \"" +
           to_decimal(seq.at(run.start + run.length - 1)) + "\"}";
}

std::string run_csv_header() {
    return "start,length,direction,first_element,last_element";
}

std::string run_to_csv_line(const Sequence& seq, const RatioRun& run) {
    return std::to_string(run.start) + ',' + std::to_string(run.length) + ',' +
           direction_name(run.direction) + ',' + to_decimal(seq.at(run.start)) + ',' +
           to_decimal(seq.at(run.start + run.length - 1));
}

}  // namespace helly
