#include "helly/detail/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "helly/errors.hpp"

namespace helly::detail {

namespace {

constexpr std::uint64_t kSegmentSpan = 1u << 21;

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd primes up to limit, by a plain odds-only sieve.
std::vector<std::uint32_t> odd_base_primes(std::uint64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 3) return primes;
    const std::uint64_t half = (limit - 1) / 2;  // index i <-> odd 2i+1
    std::vector<char> composite(half + 1, 0);
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = 1;
    }
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
    }
    return primes;
}

// Sieve the odd numbers of [lo, hi] against the given base primes.
// Returns one byte per odd number in the window, nonzero = composite.
std::vector<char> sieve_odd_segment(std::uint64_t lo, std::uint64_t hi,
                                    const std::vector<std::uint32_t>& base) {
    const std::uint64_t first_odd = lo | 1;
    const std::uint64_t count = first_odd > hi ? 0 : (hi - first_odd) / 2 + 1;
    std::vector<char> composite(count, 0);
    for (std::uint32_t p : base) {
        const std::uint64_t p64 = p;
        if (p64 * p64 > hi) break;
        std::uint64_t start = std::max(p64 * p64, (lo + p64 - 1) / p64 * p64);
        if ((start & 1) == 0) start += p64;
        for (std::uint64_t m = start; m <= hi; m += 2 * p64) {
            composite[(m - first_odd) / 2] = 1;
        }
    }
    return composite;
}

}  // namespace

int default_threads() {
    if (const char* env = std::getenv("HELLY_GRID_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 64u));
}

std::vector<std::uint64_t> primes_in_range_u64(std::uint64_t lo, std::uint64_t hi,
                                               int threads) {
    if (lo > hi) throw UsageError("inverted prime range");
    std::vector<std::uint64_t> out;
    if (hi < 2) return out;
    lo = std::max<std::uint64_t>(lo, 2);
    if (lo <= 2) out.push_back(2);

    const auto base = odd_base_primes(isqrt_u64(hi));
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t nseg = (span + kSegmentSpan - 1) / kSegmentSpan;
    if (threads <= 0) threads = default_threads();
    threads = static_cast<int>(std::min<std::uint64_t>(threads, nseg));

    std::vector<std::vector<std::uint64_t>> per_seg(nseg);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t s = next.fetch_add(1); s < nseg; s = next.fetch_add(1)) {
            const std::uint64_t s_lo = lo + s * kSegmentSpan;
            const std::uint64_t s_hi = std::min(hi, s_lo + kSegmentSpan - 1);
            const auto composite = sieve_odd_segment(s_lo, s_hi, base);
            const std::uint64_t first_odd = s_lo | 1;
            auto& primes = per_seg[s];
            for (std::uint64_t i = 0; i < composite.size(); ++i) {
                const std::uint64_t n = first_odd + 2 * i;
                if (!composite[i] && n >= 3) primes.push_back(n);
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& seg : per_seg) out.insert(out.end(), seg.begin(), seg.end());
    return out;
}

std::vector<char> prime_table_u64(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw UsageError("inverted prime range");
    std::vector<char> table(hi - lo + 1, 0);
    if (hi < 2) return table;
    if (lo <= 2 && 2 <= hi) table[2 - lo] = 1;
    const auto base = odd_base_primes(isqrt_u64(hi));
    const std::uint64_t odd_lo = std::max<std::uint64_t>(lo, 3);
    if (odd_lo > hi) return table;
    const auto composite = sieve_odd_segment(odd_lo, hi, base);
    const std::uint64_t first_odd = odd_lo | 1;
    for (std::uint64_t i = 0; i < composite.size(); ++i) {
        const std::uint64_t n = first_odd + 2 * i;
        if (!composite[i] && n >= 3) table[n - lo] = 1;
    }
    return table;
}

}  // namespace helly::detail
