#pragma once

#include "mpverify/types.hpp"

#include <vector>

namespace mpverify {

struct SearchOptions {
    u64 cap = 100'000'000;  // refuse above this
    unsigned threads = 0;   // 0 = hardware concurrency
    u64 segment_size = 1u << 20;
};

// All N <= limit with sigma(N)/N == target, ascending.  Factors each segment
// with a sieve over the base primes (no per-N trial division).
std::vector<u64> search_multiperfect(u64 limit, const Rational& target,
                                     const SearchOptions& opts = {});

}  // namespace mpverify
