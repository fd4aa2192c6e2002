#include "helly/seqgen.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "helly/detail/sieve.hpp"
#include "helly/errors.hpp"

namespace helly {

const char* seq_kind_name(SeqKind k) {
    switch (k) {
        case SeqKind::primes: return "primes";
        case SeqKind::composites: return "composites";
        case SeqKind::exponential: return "exponential";
        case SeqKind::fibonacci: return "fibonacci";
        case SeqKind::doubly_exponential: return "doubly_exponential";
        case SeqKind::file: return "file";
        case SeqKind::custom: return "custom";
    }
    return "?";
}

SeqKind seq_kind_from_name(const std::string& name) {
    for (SeqKind k : {SeqKind::primes, SeqKind::composites, SeqKind::exponential,
                      SeqKind::fibonacci, SeqKind::doubly_exponential, SeqKind::file,
                      SeqKind::custom}) {
        if (name == seq_kind_name(k)) return k;
    }
    throw ParseError("unknown sequence kind: \"" + name + "\"");
}

Sequence::Sequence(SeqKind kind, std::map<std::string, std::string> params,
                   std::vector<Int> elements)
    : kind_(kind), params_(std::move(params)) {
    if (elements.empty()) throw UsageError("sequence must be nonempty");
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
        if (elements[i] >= elements[i + 1]) {
            throw UsageError("sequence not strictly increasing at index " +
                             std::to_string(i + 1));
        }
    }
    elems_ = std::make_shared<const std::vector<Int>>(std::move(elements));
}

bool Sequence::contains(const Int& v) const {
    return std::binary_search(elems_->begin(), elems_->end(), v);
}

std::size_t Sequence::lower_bound(const Int& v) const {
    return static_cast<std::size_t>(
        std::lower_bound(elems_->begin(), elems_->end(), v) - elems_->begin());
}

std::string Sequence::label() const {
    std::ostringstream os;
    os << seq_kind_name(kind_);
    if (!params_.empty()) {
        os << '[';
        bool first = true;
        for (const auto& [k, v] : params_) {
            if (!first) os << ',';
            os << k << '=' << v;
            first = false;
        }
        os << ']';
    }
    return os.str();
}

namespace {

unsigned long to_ulong_capped(const Int& v, unsigned long cap, const char* what) {
    if (v < 0 || !v.fits_ulong_p() || v.get_ui() > cap) {
        throw ResourceError(std::string(what) + " exceeds cap " + std::to_string(cap));
    }
    return v.get_ui();
}

std::vector<Int> to_int_vec(const std::vector<std::uint64_t>& v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (std::uint64_t x : v) {
        Int e;
        mpz_set_ui(e.get_mpz_t(), static_cast<unsigned long>(x));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

Sequence primes_up_to(const Int& limit) {
    if (limit < 2) throw UsageError("empty prime range: limit must be >= 2");
    const unsigned long n = to_ulong_capped(limit, kPrimeLimitCap, "prime limit");
    auto primes = detail::primes_in_range_u64(2, n);
    return Sequence(SeqKind::primes, {{"limit", to_decimal(limit)}}, to_int_vec(primes));
}

Sequence primes_in_range(const Int& lo, const Int& hi) {
    if (lo > hi) throw UsageError("inverted prime range");
    if (lo < 2) throw UsageError("prime range must start at 2 or above");
    const unsigned long l = to_ulong_capped(lo, kPrimeLimitCap, "prime range");
    const unsigned long h = to_ulong_capped(hi, kPrimeLimitCap, "prime range");
    auto primes = detail::primes_in_range_u64(l, h);
    if (primes.empty()) throw UsageError("no primes in [" + to_decimal(lo) + ", " +
                                         to_decimal(hi) + "]");
    return Sequence(SeqKind::primes,
                    {{"lo", to_decimal(lo)}, {"hi", to_decimal(hi)}},
                    to_int_vec(primes));
}

Sequence composites_in_range(const Int& lo, const Int& hi) {
    if (lo > hi) throw UsageError("inverted composite range");
    Int span = hi - lo;
    to_ulong_capped(span, kCompositeSpanCap, "composite range span");
    if (abs(lo) > Int(kCompositeMagnitudeCap) || abs(hi) > Int(kCompositeMagnitudeCap)) {
        throw ResourceError("composite range endpoint beyond supported magnitude");
    }

    std::vector<Int> out;
    Int v = lo;
    // Everything below 2 is non-prime by the convention P = {2, 3, 5, ...}.
    for (; v < 2 && v <= hi; v += 1) out.push_back(v);
    if (v <= hi) {
        const auto table = detail::prime_table_u64(v.get_ui(), hi.get_ui());
        for (std::size_t i = 0; i < table.size(); ++i, v += 1) {
            if (!table[i]) out.push_back(v);
        }
    }
    if (out.empty()) {
        throw UsageError("no non-primes in [" + to_decimal(lo) + ", " + to_decimal(hi) + "]");
    }
    return Sequence(SeqKind::composites,
                    {{"lo", to_decimal(lo)}, {"hi", to_decimal(hi)}}, std::move(out));
}

Sequence exponential(const Int& base, int count) {
    if (base < 2) throw UsageError("exponential base must be >= 2");
    if (count < 1) throw UsageError("exponential count must be >= 1");
    std::vector<Int> out;
    out.reserve(count);
    Int v = base;
    for (int i = 0; i < count; ++i) {
        out.push_back(v);
        v *= base;
    }
    return Sequence(SeqKind::exponential,
                    {{"base", to_decimal(base)}, {"count", std::to_string(count)}},
                    std::move(out));
}

Sequence fibonacci(int count) {
    if (count < 1) throw UsageError("fibonacci count must be >= 1");
    std::vector<Int> out;
    out.reserve(count);
    // Distinct values >= 1: the duplicated leading 1 is dropped.
    Int a = 1, b = 2;
    for (int i = 0; i < count; ++i) {
        out.push_back(a);
        Int next = a + b;
        a = b;
        b = next;
    }
    return Sequence(SeqKind::fibonacci, {{"count", std::to_string(count)}},
                    std::move(out));
}

Sequence doubly_exponential(const Int& base, int count) {
    if (base < 2) throw UsageError("doubly exponential base must be >= 2");
    if (count < 1) throw UsageError("doubly exponential count must be >= 1");
    if (count > kDoublyExpCountCap) {
        throw ResourceError("doubly exponential count capped at " +
                            std::to_string(kDoublyExpCountCap));
    }
    std::vector<Int> out;
    out.reserve(count);
    Int v = base * base;  // base^(2^1)
    for (int i = 0; i < count; ++i) {
        out.push_back(v);
        v = v * v;
    }
    return Sequence(SeqKind::doubly_exponential,
                    {{"base", to_decimal(base)}, {"count", std::to_string(count)}},
                    std::move(out));
}

Sequence negate_reverse(const Sequence& s) {
    std::vector<Int> out;
    out.reserve(s.size());
    for (auto it = s.elements().rbegin(); it != s.elements().rend(); ++it) {
        out.push_back(-*it);
    }
    return Sequence(SeqKind::custom, {{"derived", "negate_reverse(" + s.label() + ")"}},
                    std::move(out));
}

Sequence sequence_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sequence file: " + path);
    std::vector<Int> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);
        Int v;
        try {
            v = int_from_decimal(tok);
        } catch (const ParseError&) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": not a decimal integer: \"" + tok + "\"");
        }
        if (!out.empty() && out.back() >= v) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": sequence not strictly increasing");
        }
        out.push_back(std::move(v));
    }
    if (out.empty()) throw ParseError(path + ": no elements");
    return Sequence(SeqKind::file, {{"path", path}}, std::move(out));
}

void write_sequence(const Sequence& s, std::ostream& out) {
    for (const Int& v : s.elements()) out << to_decimal(v) << '\n';
}

}  // namespace helly
