// Independent oracles for expected values. Everything here is deliberately
// naive and separate from the library implementation paths it checks.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "helly/bigint.hpp"

namespace oracle {

inline bool trial_division_is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::int64_t> trial_division_primes(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (trial_division_is_prime(n)) out.push_back(n);
    }
    return out;
}

inline helly::Int pow_by_repeated_squaring(helly::Int base, std::uint64_t exp) {
    helly::Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// F(n) with F(1) = F(2) = 1, via 2x2 matrix power.
inline helly::Int fibonacci_by_matrix_power(std::uint64_t n) {
    using M = std::array<helly::Int, 4>;  // row major
    auto mul = [](const M& a, const M& b) {
        return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    M result{1, 0, 0, 1};
    M base{1, 1, 1, 0};
    std::uint64_t e = n;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result[1];  // [[F(n+1), F(n)], [F(n), F(n-1)]]
}

}  // namespace oracle
