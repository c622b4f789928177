#pragma once

#include "mpverify/prime_sieve.hpp"
#include "mpverify/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mpverify {

// Arithmetic-progression query; modulus 1 means "all primes".
struct APQuery {
    u64 modulus = 1;
    u64 residue = 0;
};

struct SumsOptions {
    u64 segment_size = kDefaultSegmentSize;
    unsigned threads = 0;  // 0 = hardware concurrency
    u64 cap = kDefaultSieveCap;
    std::string checkpoint_path;          // theta() only; empty = no checkpointing
    u64 checkpoint_stride = 10'000'000;   // CSV row every this many integers
};

struct APSums {
    long double theta = 0;
    long double recip = 0;
    long double logp_over_p = 0;
    u64 pi = 0;
};

// All four sums over primes p <= x with p ≡ residue (mod modulus), one pass.
// Compensated long double accumulation, fixed ascending merge order: results
// are bit-identical for any thread count.
APSums ap_sums(u64 x, const APQuery& q, const SumsOptions& opts = {});

long double theta(u64 x, const APQuery& q, const SumsOptions& opts = {});
long double sum_recip(u64 z, const APQuery& q, const SumsOptions& opts = {});
long double sum_logp_over_p(u64 z, const APQuery& q, const SumsOptions& opts = {});

// (prod_{p<=z} (1 - 1/p), prod_{p<=z} (1 + 1/p)) via summed logs
std::pair<long double, long double> mertens_products(u64 z, const SumsOptions& opts = {});

// phi1(z) = int_60^z theta(t,15,1) (1+log t) / (t^2 log^2 t) dt, z > 60.
// Exact order swap: sum of log p * [-1/(t log t)] from max(p,60) to z.
long double phi1(long double z, const SumsOptions& opts = {});
// phi2(z) = int_31^z theta(t,15,1) / t^2 dt, z > 31; antiderivative -1/t.
long double phi2(long double z, const SumsOptions& opts = {});

struct ThetaCheckpoint {
    u64 x = 0;
    long double theta = 0;
    u64 pi = 0;
};

// One pass to max(xs), sampling running (theta, pi) at each requested x.
std::vector<ThetaCheckpoint> theta_profile(std::vector<u64> xs, const APQuery& q,
                                           const SumsOptions& opts = {});

}  // namespace mpverify
