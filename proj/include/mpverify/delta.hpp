#pragma once

#include "mpverify/types.hpp"

#include <string>
#include <vector>

namespace mpverify {

struct DeltaQuery {
    unsigned s = 1;
    u64 n = 2;
    u64 d = 1;
    std::vector<u64> primes;  // odd, strictly increasing, size s
    unsigned s_cap = 8;       // recursion width guard
};

// delta = 1/n^2, the s-independent base constant
Rational delta_base(u64 n);

// x_i = floor(log(2 s n prod(p_j - 1)) / log p_i), by integer power
// comparison only: p^x <= 2 s n prod(p_j - 1) < p^(x+1)
std::vector<unsigned> pomerance_xi(unsigned s, u64 n, const std::vector<u64>& primes);

struct DeltaResult {
    Rational value;
    std::string branch;  // "base", "product" or "recursive"
};

// Lower bound for n/d - h(p_1^e_1 ... p_s^e_s) over all admissible
// exponents.  s = 1: min over listed p of 1/(n^2 (p-1)).  s >= 2: min of
// the product branch 1/(n prod(p_i - 1)) and the recursive branch
// min_i min_{1<=a<=x_i} h(p_i^a) * delta(s-1, without p_i).
DeltaResult delta_recursive(const DeltaQuery& q);

// Smallest C such that h(p^e) >= (n/d - delta'/2)/(n/d - delta') forces
// p <= C; exact rational solve of p/(p-1) >= ratio.
Integer ps_cap(u64 n, u64 d, const Rational& delta_prev);

}  // namespace mpverify
