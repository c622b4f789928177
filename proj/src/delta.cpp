#include "mpverify/delta.hpp"

#include "mpverify/factorization.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace mpverify {

Rational delta_base(u64 n) {
    if (n < 2) throw std::invalid_argument("delta_base: need n >= 2");
    return Rational(Integer(1), Integer(n) * n);
}

std::vector<unsigned> pomerance_xi(unsigned s, u64 n, const std::vector<u64>& primes) {
    if (primes.empty()) throw std::invalid_argument("pomerance_xi: need primes");
    Integer bound = Integer(2) * s * n;
    for (u64 p : primes) bound *= Integer(p) - 1;
    std::vector<unsigned> xs;
    xs.reserve(primes.size());
    for (u64 p : primes) {
        unsigned x = 0;
        Integer pw = 1;
        while (pw * p <= bound) {
            pw *= p;
            ++x;
        }
        xs.push_back(x);
    }
    return xs;
}

namespace {

void validate(const DeltaQuery& q) {
    if (q.s == 0 || q.s != q.primes.size())
        throw std::invalid_argument("delta_recursive: s must match the prime list length");
    if (q.s > q.s_cap)
        throw std::invalid_argument("delta_recursive: s exceeds cap " + std::to_string(q.s_cap));
    if (q.d == 0 || q.n <= q.d || std::gcd(q.n, q.d) != 1)
        throw std::invalid_argument("delta_recursive: need gcd(n,d)=1 and n/d > 1");
    u64 last = 2;
    for (u64 p : q.primes) {
        if (p <= last || p % 2 == 0 || !is_prime_u64(p))
            throw std::invalid_argument("delta_recursive: primes must be odd, distinct, "
                                        "ascending");
        last = p;
    }
}

struct Memo {
    std::map<std::vector<u64>, std::pair<Rational, bool>> map;  // value, used_recursive
};

// returns (delta, recursive_branch_won)
std::pair<Rational, bool> delta_rec(unsigned s, u64 n, const std::vector<u64>& primes,
                                    Memo& memo) {
    if (auto it = memo.map.find(primes); it != memo.map.end()) return it->second;

    std::pair<Rational, bool> result;
    if (s == 1) {
        // (4.5)-style base: 1/(n^2 (p-1))
        result = {Rational(Integer(1), Integer(n) * n * (Integer(primes[0]) - 1)), false};
    } else {
        Integer prod = 1;
        for (u64 p : primes) prod *= Integer(p) - 1;
        Rational best(Integer(1), Integer(n) * prod);  // product branch
        bool recursive_won = false;

        const std::vector<unsigned> xs = pomerance_xi(s, n, primes);
        for (size_t i = 0; i < primes.size(); ++i) {
            std::vector<u64> rest;
            rest.reserve(primes.size() - 1);
            for (size_t j = 0; j < primes.size(); ++j)
                if (j != i) rest.push_back(primes[j]);
            const Rational sub = delta_rec(s - 1, n, rest, memo).first;
            for (unsigned a = 1; a <= xs[i]; ++a) {
                const Rational cand = prime_power_abundancy(Integer(primes[i]), a) * sub;
                if (cand < best) {
                    best = cand;
                    recursive_won = true;
                }
            }
        }
        result = {best, recursive_won};
    }
    memo.map.emplace(primes, result);
    return result;
}

}  // namespace

DeltaResult delta_recursive(const DeltaQuery& q) {
    validate(q);
    Memo memo;
    auto [value, recursive] = delta_rec(q.s, q.n, q.primes, memo);
    DeltaResult r;
    r.value = value;
    r.branch = q.s == 1 ? "base" : (recursive ? "recursive" : "product");
    return r;
}

Integer ps_cap(u64 n, u64 d, const Rational& delta_prev) {
    if (d == 0 || n <= d) throw std::invalid_argument("ps_cap: need n/d > 1");
    const Rational nd{Integer(n), Integer(d)};
    if (delta_prev <= 0 || delta_prev >= nd - 1)
        throw std::domain_error("ps_cap: need 0 < delta' < n/d - 1");
    const Rational ratio = (nd - delta_prev / 2) / (nd - delta_prev);
    if (ratio <= 1) throw std::domain_error("ps_cap: ratio <= 1 gives no constraint");
    // p/(p-1) >= r  <=>  p <= r/(r-1)
    const Rational cap = ratio / (ratio - 1);
    Integer c = numerator(cap) / denominator(cap);
    if (c * denominator(cap) != numerator(cap)) c += 1;  // ceil
    return c;
}

}  // namespace mpverify
