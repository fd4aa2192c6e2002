#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "helly/bigint.hpp"
#include "helly/seqgen.hpp"

namespace helly {

enum class Ordering { Less, Equal, Greater };
enum class RunDirection { decreasing, increasing };

const char* direction_name(RunDirection d);
RunDirection direction_from_name(const std::string& name);

// A maximal window of k consecutive sequence elements whose gap ratios are
// strictly monotone. `start` indexes the source sequence (0-based); the run
// covers elements [start, start + length).
struct RatioRun {
    std::size_t start = 0;
    std::size_t length = 0;
    RunDirection direction = RunDirection::decreasing;
};

// Exact differences elements[i+1] - elements[i]. Requires |seq| >= 2.
std::vector<Int> gaps(const Sequence& seq);

// Orders g2/g1 against g1/g0 by the cross-multiplied integer comparison
// g2*g0 <=> g1*g1. No floating point anywhere.
Ordering ratio_compare(const Int& g0, const Int& g1, const Int& g2);

// All maximal runs of the requested direction with length >= min_length
// (min_length >= 4), ordered by start index.
std::vector<RatioRun> scan_runs(const Sequence& seq, RunDirection direction,
                                std::size_t min_length = 4);

// Checks the ratio condition over a claimed run window. `reversal_at` is the
// first comparison index whose ordering strictly opposes the claim;
// `equal_at` the first index where the comparison degenerates to Equal.
struct RunValidation {
    std::optional<std::size_t> reversal_at;
    std::optional<std::size_t> equal_at;
    bool strict() const { return !reversal_at && !equal_at; }
};
RunValidation validate_run(const Sequence& seq, std::size_t start, std::size_t length,
                           RunDirection direction);

struct AdmissibilityReport {
    bool admissible = false;
    // Tested prime -> a residue class mod p missed by the set (when admissible).
    std::map<std::uint64_t, std::uint64_t> witnesses;
    // The prime whose residue classes are fully covered (when not admissible).
    std::optional<std::uint64_t> violating_prime;
    std::uint64_t max_prime_tested = 0;
    // States the pigeonhole reduction that makes the test finite.
    std::string reduction_note;
};

// Tests all primes p <= |values|. Larger primes are skipped: m distinct
// residues can never cover p > m classes.
AdmissibilityReport is_admissible(const std::vector<Int>& values);

// True iff the subsequence base^(2^r(1)), ..., base^(2^r(k)) has strictly
// increasing gap ratios at every index. Requires k >= 4 and strictly
// increasing indices r(i) >= 1 within the doubly-exponential cap.
bool check_doubly_exponential_convexity(const Int& base, const std::vector<int>& indices);

// Run records serialize to JSON lines / CSV with big integers as decimal
// strings; `start` is the 0-based index into the source sequence.
std::string run_to_json_line(const Sequence& seq, const RatioRun& run);
std::string run_csv_header();
std::string run_to_csv_line(const Sequence& seq, const RatioRun& run);

}  // namespace helly
