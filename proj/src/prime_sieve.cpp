#include "mpverify/prime_sieve.hpp"

#include <stdexcept>

namespace mpverify {

namespace {

struct WheelTables {
    u8 bit_of[30];   // residue mod 30 -> bit index, 0xFF off-wheel
    u8 fwd_add[30];  // distance to the next on-wheel value
    u8 fwd_idx[30];  // its residue index
    u8 gaps[8];      // gap from residue i to the next wheel residue

    WheelTables() {
        for (int r = 0; r < 30; ++r) bit_of[r] = 0xFF;
        for (int j = 0; j < 8; ++j) bit_of[kWheelResidues[j]] = static_cast<u8>(j);
        for (int j = 0; j < 8; ++j) {
            const int next = (j + 1 < 8) ? kWheelResidues[j + 1] : kWheelResidues[0] + 30;
            gaps[j] = static_cast<u8>(next - kWheelResidues[j]);
        }
        for (int r = 0; r < 30; ++r) {
            int j = 0;
            while (kWheelResidues[j] < r) ++j;  // R[7] = 29 >= r always
            fwd_add[r] = static_cast<u8>(kWheelResidues[j] - r);
            fwd_idx[r] = static_cast<u8>(j);
        }
    }
};

const WheelTables& tables() {
    static const WheelTables t;
    return t;
}

}  // namespace

std::vector<u32> base_primes(u32 limit) {
    std::vector<u32> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u32 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = u64(i) * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

void WheelSegment::sieve(u64 lo, u64 hi, const std::vector<u32>& base) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("WheelSegment: bad range");
    const WheelTables& t = tables();
    lo_ = lo;
    hi_ = hi;
    block0_ = lo / 30;
    bytes_.assign(hi / 30 - block0_ + 1, 0xFF);
    if (lo <= 1) bytes_[0] &= static_cast<u8>(~1u);  // 1 is not prime

    for (const u32 p : base) {
        const u64 p64 = p;
        if (p64 * p64 > hi) break;
        if (p < 7) continue;  // off-wheel
        u64 q = std::max<u64>(p64, (lo + p64 - 1) / p64);
        unsigned idx = t.fwd_idx[q % 30];
        q += t.fwd_add[q % 30];
        u64 n = p64 * q;
        while (n <= hi) {
            bytes_[n / 30 - block0_] &= static_cast<u8>(~(1u << t.bit_of[n % 30]));
            n += p64 * t.gaps[idx];
            idx = (idx + 1) & 7;
        }
    }
}

std::vector<u64> primes_in_range(const SieveRange& r, u64 cap) {
    if (r.hi < r.lo) throw std::invalid_argument("primes_in_range: hi < lo");
    if (r.segment_size < kMinSegmentSize)
        throw std::invalid_argument("primes_in_range: segment_size below 2^16");
    if (r.hi > cap)
        throw std::invalid_argument("primes_in_range: hi " + std::to_string(r.hi) +
                                    " exceeds cap " + std::to_string(cap));
    std::vector<u64> out;
    for_each_prime(r.lo, r.hi, [&out](u64 p) { out.push_back(p); }, r.segment_size);
    return out;
}

u64 count_primes(u64 lo, u64 hi) {
    u64 n = 0;
    for_each_prime(lo, hi, [&n](u64) { ++n; });
    return n;
}

}  // namespace mpverify
