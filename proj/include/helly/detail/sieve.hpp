#pragma once

#include <cstdint>
#include <vector>

namespace helly::detail {

// Worker count: HELLY_GRID_THREADS when set, else hardware concurrency.
int default_threads();

// Primes in [lo, hi], ascending. Segmented Eratosthenes; segments may be
// sieved by a worker pool, output order is deterministic either way.
std::vector<std::uint64_t> primes_in_range_u64(std::uint64_t lo, std::uint64_t hi,
                                               int threads = 0);

// Byte table over [lo, hi]: entry i is nonzero iff lo + i is prime.
std::vector<char> prime_table_u64(std::uint64_t lo, std::uint64_t hi);

}  // namespace helly::detail
