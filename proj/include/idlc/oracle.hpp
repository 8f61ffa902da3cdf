#pragma once

#include <atomic>
#include <cstdint>

#include "idlc/bitstring.hpp"

namespace idlc {

/**
 * Query-metered view of a (possibly corrupted) word.
 *
 * Corrupted insertion-deletion words change length, so decoders may probe
 * positions that no longer exist; such reads return 0 instead of failing and
 * are still charged. The counter is atomic so trial workers may share one
 * oracle; "counts are exact in aggregate".
 */
class QueryOracle {
public:
    explicit QueryOracle(const BitString& word) : word_(&word) {}

    std::size_t length() const { return word_->size(); }

    int read(std::size_t pos) const {
        count_.fetch_add(1, std::memory_order_relaxed);
        if (pos >= word_->size()) return 0;
        return word_->get(pos);
    }

    std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }
    void reset_count() { count_.store(0, std::memory_order_relaxed); }

private:
    const BitString* word_;
    mutable std::atomic<std::uint64_t> count_{0};
};

}  // namespace idlc
