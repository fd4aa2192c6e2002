#include "helly/seqgen.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "helly/errors.hpp"
#include "oracles.hpp"

using namespace helly;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("helly_seq_test_") + std::to_string(rand()) + ".txt";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("primes_up_to small values") {
    CHECK(primes_up_to(20).elements() == ints({2, 3, 5, 7, 11, 13, 17, 19}));
    CHECK(primes_up_to(2).elements() == ints({2}));
    CHECK_THROWS_AS(primes_up_to(1), UsageError);
}

TEST_CASE("primes_up_to agrees with trial division up to 1e5") {
    const Sequence s = primes_up_to(100000);
    const auto expect = oracle::trial_division_primes(2, 100000);
    REQUIRE(s.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(s.at(i) == Int(expect[i]));
    }
}

TEST_CASE("primes_up_to 1e6 count matches an independent sieve") {
    // pi(10^6) recomputed by trial division, not assumed
    const auto expect = oracle::trial_division_primes(2, 1000000);
    CHECK(primes_up_to(1000000).size() == expect.size());
    CHECK(expect.size() == 78498);
}

TEST_CASE("primes_in_range") {
    CHECK(primes_in_range(10, 20).elements() == ints({11, 13, 17, 19}));
    CHECK(primes_in_range(2, 2).elements() == ints({2}));
    CHECK_THROWS_AS(primes_in_range(20, 10), UsageError);
    CHECK_THROWS_AS(primes_in_range(1, 10), UsageError);

    const Sequence window = primes_in_range(1000000, 1000100);
    const auto expect = oracle::trial_division_primes(1000000, 1000100);
    REQUIRE(window.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(window.at(i) == Int(expect[i]));
    }
}

TEST_CASE("composites_in_range") {
    CHECK(composites_in_range(0, 10).elements() == ints({0, 1, 4, 6, 8, 9, 10}));
    CHECK(composites_in_range(-3, 3).elements() == ints({-3, -2, -1, 0, 1}));
    CHECK_THROWS_AS(composites_in_range(3, 2), UsageError);
    // all values prime: the nonempty-sequence invariant wins over returning []
    CHECK_THROWS_AS(composites_in_range(2, 3), UsageError);

    // membership agrees with the declared predicate
    const Sequence s = composites_in_range(-20, 200);
    for (const Int& v : s.elements()) {
        CHECK_FALSE(oracle::trial_division_is_prime(v.get_si()));
    }
    CHECK(s.size() == 221 - oracle::trial_division_primes(2, 200).size());
}

TEST_CASE("exponential") {
    CHECK(exponential(2, 5).elements() == ints({2, 4, 8, 16, 32}));
    CHECK(exponential(3, 1).elements() == ints({3}));
    CHECK_THROWS_AS(exponential(1, 5), UsageError);

    const Sequence s = exponential(3, 40);
    REQUIRE(s.size() == 40);
    CHECK(s.back() == oracle::pow_by_repeated_squaring(3, 40));
    CHECK(s.back() == int_from_decimal("12157665459056928801"));
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        CHECK(s.at(i + 1) == 3 * s.at(i));
    }
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(6).elements() == ints({1, 2, 3, 5, 8, 13}));
    CHECK(fibonacci(1).elements() == ints({1}));
    CHECK_THROWS_AS(fibonacci(0), UsageError);

    // k-th distinct value >= 1 is F(k+1) in the F(1)=F(2)=1 indexing
    const Sequence s = fibonacci(50);
    CHECK(s.back() == oracle::fibonacci_by_matrix_power(51));
    CHECK(s.back() == Int(20365011074));
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        CHECK(s.at(i + 2) == s.at(i + 1) + s.at(i));
    }
}

TEST_CASE("doubly_exponential") {
    CHECK(doubly_exponential(3, 3).elements() == ints({9, 81, 6561}));
    CHECK(doubly_exponential(2, 2).elements() == ints({4, 16}));
    CHECK(doubly_exponential(3, 5).back() == Int(1853020188851841));
    CHECK(doubly_exponential(3, 5).back() == oracle::pow_by_repeated_squaring(3, 32));
    CHECK_THROWS_AS(doubly_exponential(3, 21), ResourceError);
    CHECK_THROWS_AS(doubly_exponential(1, 3), UsageError);
}

TEST_CASE("negate_reverse") {
    CHECK(negate_reverse(doubly_exponential(3, 3)).elements() == ints({-6561, -81, -9}));
    CHECK(negate_reverse(Sequence(SeqKind::custom, {}, ints({5}))).elements() == ints({-5}));

    // involution and gap reversal on [2,3,5,7,11]
    const Sequence s = primes_up_to(11);
    const Sequence r = negate_reverse(s);
    CHECK(negate_reverse(r).elements() == s.elements());
    std::vector<Int> sg, rg;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) sg.push_back(s.at(i + 1) - s.at(i));
    for (std::size_t i = 0; i + 1 < r.size(); ++i) rg.push_back(r.at(i + 1) - r.at(i));
    CHECK(sg == ints({1, 2, 2, 4}));
    CHECK(rg == ints({4, 2, 2, 1}));
}

TEST_CASE("sequence invariants") {
    CHECK_THROWS_AS(Sequence(SeqKind::custom, {}, {}), UsageError);
    CHECK_THROWS_AS(Sequence(SeqKind::custom, {}, ints({1, 1})), UsageError);
    CHECK_THROWS_AS(Sequence(SeqKind::custom, {}, ints({2, 1})), UsageError);

    const Sequence s = primes_up_to(1000);
    CHECK(s.contains(997));
    CHECK_FALSE(s.contains(999));
    CHECK(s.lower_bound(8) == 4);  // first element >= 8 is 11
}

TEST_CASE("sequence file round trip") {
    {
        TempFile f("2\n3\n5\n");
        CHECK(sequence_from_file(f.path).elements() == ints({2, 3, 5}));
    }
    {
        TempFile f("5\n3\n");
        CHECK_THROWS_WITH_AS(sequence_from_file(f.path),
                             doctest::Contains(":2"), ParseError);
    }
    {
        TempFile f("# header\n 7 \n11 # trailing comment\n\n13\n");
        CHECK(sequence_from_file(f.path).elements() == ints({7, 11, 13}));
    }
    {
        TempFile f("12x\n");
        CHECK_THROWS_AS(sequence_from_file(f.path), ParseError);
    }

    const Sequence primes = primes_up_to(2000000);
    std::ostringstream buf;
    write_sequence(primes, buf);
    TempFile f(buf.str());
    const Sequence back = sequence_from_file(f.path);
    CHECK(back.elements() == primes.elements());
}
