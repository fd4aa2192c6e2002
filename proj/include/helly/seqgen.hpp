#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "helly/bigint.hpp"

namespace helly {

enum class SeqKind {
    primes,
    composites,
    exponential,
    fibonacci,
    doubly_exponential,
    file,
    custom,
};

const char* seq_kind_name(SeqKind k);
SeqKind seq_kind_from_name(const std::string& name);

// A named, strictly increasing list of integers: the one-dimensional factor
// of a product grid. Immutable after construction; copies share storage.
class Sequence {
  public:
    Sequence(SeqKind kind, std::map<std::string, std::string> params,
             std::vector<Int> elements);

    SeqKind kind() const { return kind_; }
    const std::map<std::string, std::string>& params() const { return params_; }
    const std::vector<Int>& elements() const { return *elems_; }

    std::size_t size() const { return elems_->size(); }
    const Int& at(std::size_t i) const { return elems_->at(i); }
    const Int& front() const { return elems_->front(); }
    const Int& back() const { return elems_->back(); }

    bool contains(const Int& v) const;
    // Index of the first element >= v (== size() when none).
    std::size_t lower_bound(const Int& v) const;

    // Human-readable tag, e.g. "primes[limit=100]".
    std::string label() const;

  private:
    SeqKind kind_;
    std::map<std::string, std::string> params_;
    std::shared_ptr<const std::vector<Int>> elems_;
};

// Caps below are resource guards, not part of any mathematical contract.
constexpr int kDoublyExpCountCap = 20;
constexpr unsigned long kPrimeLimitCap = 100000000000ull;        // 1e11
constexpr unsigned long kCompositeSpanCap = 100000000ull;        // 1e8
constexpr unsigned long kCompositeMagnitudeCap = 100000000000000ull;  // 1e14

Sequence primes_up_to(const Int& limit);
Sequence primes_in_range(const Int& lo, const Int& hi);
Sequence composites_in_range(const Int& lo, const Int& hi);
Sequence exponential(const Int& base, int count);
Sequence fibonacci(int count);
Sequence doubly_exponential(const Int& base, int count);
Sequence negate_reverse(const Sequence& s);

// One decimal integer per line; '#' starts a comment.
Sequence sequence_from_file(const std::string& path);
void write_sequence(const Sequence& s, std::ostream& out);

}  // namespace helly
