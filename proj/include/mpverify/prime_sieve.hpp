#pragma once

#include "mpverify/types.hpp"

#include <algorithm>
#include <vector>

namespace mpverify {

inline constexpr u64 kDefaultSieveCap = 10'000'000'000ull;
inline constexpr u64 kDefaultSegmentSize = 1u << 20;
inline constexpr u64 kMinSegmentSize = 1u << 16;

struct SieveRange {
    u64 lo = 1;
    u64 hi = 1;
    u64 segment_size = kDefaultSegmentSize;
};

// wheel-30 residues and their bit positions
inline constexpr u8 kWheelResidues[8] = {1, 7, 11, 13, 17, 19, 23, 29};

// simple odd sieve; supplies the strike primes for segments
std::vector<u32> base_primes(u32 limit);

// One sieved segment [lo, hi] as a wheel-30 bitmap (one byte per 30 numbers).
// Covers primes > 5 only; 2, 3, 5 are handled by the enumeration wrappers.
class WheelSegment {
  public:
    void sieve(u64 lo, u64 hi, const std::vector<u32>& base);

    template <class F>
    void for_each(F&& f) const {
        const u64 nblocks = bytes_.size();
        for (u64 b = 0; b < nblocks; ++b) {
            unsigned byte = bytes_[b];
            const u64 base30 = (block0_ + b) * 30;
            while (byte) {
                const int j = __builtin_ctz(byte);
                byte &= byte - 1;
                const u64 n = base30 + kWheelResidues[j];
                if (n >= lo_ && n <= hi_) f(n);
            }
        }
    }

  private:
    u64 lo_ = 0, hi_ = 0, block0_ = 0;
    std::vector<u8> bytes_;
};

// Primes in [lo, hi] ascending, including 2, 3, 5 when in range.
// Segment-local memory only; hi is the caller's responsibility to cap.
template <class F>
void for_each_prime(u64 lo, u64 hi, F&& f, u64 segment_size = kDefaultSegmentSize) {
    if (hi < lo) return;
    segment_size = std::max(segment_size, kMinSegmentSize);
    for (u64 p : {2ull, 3ull, 5ull})
        if (p >= lo && p <= hi) f(p);
    const u32 root = static_cast<u32>(std::min<u64>(
        0xFFFFFFFFull, static_cast<u64>(__builtin_sqrtl(static_cast<long double>(hi))) + 2));
    const std::vector<u32> base = base_primes(root);
    // segments aligned to multiples of segment_size, so the cut geometry is
    // independent of lo (parallel callers rely on this)
    WheelSegment seg;
    u64 a = lo;
    while (a <= hi) {
        const u64 b = std::min(hi, ((a - 1) / segment_size + 1) * segment_size);
        seg.sieve(a, b, base);
        seg.for_each(f);
        a = b + 1;
    }
}

std::vector<u64> primes_in_range(const SieveRange& r, u64 cap = kDefaultSieveCap);
u64 count_primes(u64 lo, u64 hi);

}  // namespace mpverify
