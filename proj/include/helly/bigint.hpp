#pragma once

#include <gmpxx.h>

#include <string>

#include "helly/errors.hpp"

namespace helly {

// All public arithmetic is arbitrary precision; there is no fixed-width
// fast path in any contract. GMP supplies the representation.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

inline Int int_from_decimal(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
        throw ParseError("not a decimal integer: \"" + s + "\"");
    }
    return v;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Compare an integer against a rational without converting either side.
inline int cmp_int_rat(const Int& a, const Rat& q) {
    return -mpq_cmp_z(q.get_mpq_t(), a.get_mpz_t());
}

}  // namespace helly
