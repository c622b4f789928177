#include "mpverify/multiperfect.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mpverify {

namespace {

std::vector<u32> simple_primes(u32 limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<u32> out;
    for (u32 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (u64 j = u64(i) * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return out;
}

}  // namespace

std::vector<u64> search_multiperfect(u64 limit, const Rational& target,
                                     const SearchOptions& opts) {
    if (limit > opts.cap)
        throw std::invalid_argument("search_multiperfect: limit " + std::to_string(limit) +
                                    " exceeds cap " + std::to_string(opts.cap) +
                                    " (raise the cap explicitly for longer runs)");
    if (limit == 0) return {};

    const Integer num_i = numerator(target);
    const Integer den_i = denominator(target);
    if (num_i <= 0 || den_i <= 0 || num_i > Integer(~0ull) || den_i > Integer(~0ull))
        throw std::invalid_argument("search_multiperfect: target out of range");
    const u64 num = num_i.convert_to<u64>();
    const u64 den = den_i.convert_to<u64>();

    const u32 root = static_cast<u32>(std::sqrt(static_cast<long double>(limit))) + 1;
    const std::vector<u32> primes = simple_primes(root);

    const u64 seg = std::max<u64>(opts.segment_size, 1u << 16);
    const u64 nseg = (limit + seg - 1) / seg;
    std::vector<std::vector<u64>> found(nseg);

    std::atomic<u64> next{0};
    auto worker = [&]() {
        std::vector<u64> sig, rem;
        for (;;) {
            const u64 k = next.fetch_add(1);
            if (k >= nseg) return;
            const u64 lo = k * seg + 1;
            const u64 hi = std::min(limit, (k + 1) * seg);
            const u64 n_in = hi - lo + 1;
            sig.assign(n_in, 1);
            rem.resize(n_in);
            for (u64 i = 0; i < n_in; ++i) rem[i] = lo + i;
            for (u32 p : primes) {
                const u64 p64 = p;
                if (p64 * p64 > hi) break;
                u64 m = ((lo + p64 - 1) / p64) * p64;
                for (; m <= hi; m += p64) {
                    const u64 i = m - lo;
                    u64 pk = 1;
                    while (rem[i] % p64 == 0) {
                        rem[i] /= p64;
                        pk *= p64;
                    }
                    // sigma(p^k) = (p^{k+1} - 1)/(p - 1); pk*p <= n*p < 2^64
                    sig[i] *= (pk * p64 - 1) / (p64 - 1);
                }
            }
            for (u64 i = 0; i < n_in; ++i) {
                if (rem[i] > 1) sig[i] *= rem[i] + 1;  // one prime factor > sqrt
                // h(n) == num/den  <=>  den*sigma(n) == num*n
                const unsigned __int128 lhs = static_cast<unsigned __int128>(den) * sig[i];
                const unsigned __int128 rhs = static_cast<unsigned __int128>(num) * (lo + i);
                if (lhs == rhs) found[k].push_back(lo + i);
            }
        }
    };

    unsigned nthreads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = static_cast<unsigned>(std::min<u64>(nthreads, nseg));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<u64> out;
    for (const auto& v : found) out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace mpverify
