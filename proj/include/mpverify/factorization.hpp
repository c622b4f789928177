#pragma once

#include "mpverify/types.hpp"

#include <string_view>
#include <vector>

namespace mpverify {

struct PrimePower {
    Integer prime;
    unsigned exponent = 1;
};

// A positive integer as (prime, exponent) pairs, strictly increasing primes.
// The empty list is N = 1.  Construction validates primality of every listed
// prime (deterministic Miller-Rabin below 2^64, 40 probabilistic rounds
// above).
class Factorization {
  public:
    Factorization() = default;
    static Factorization from_pairs(std::vector<PrimePower> pairs);
    // trial-division factorization of a machine word (n >= 1)
    static Factorization of_u64(u64 n);
    // "2^5,3,7^2" or "1"
    static Factorization parse(std::string_view text);

    const std::vector<PrimePower>& pairs() const { return pairs_; }
    bool is_one() const { return pairs_.empty(); }
    bool is_odd() const;
    Integer value() const;
    std::string str() const;

  private:
    std::vector<PrimePower> pairs_;
};

bool is_probable_prime(const Integer& n);
bool is_prime_u64(u64 n);

// 1 + p + ... + p^e, exact
Integer sigma_prime_power(const Integer& p, unsigned e);
Integer sigma(const Factorization& f);

// h(p^e) = sigma(p^e) / p^e in lowest terms
Rational prime_power_abundancy(const Integer& p, unsigned e);
// h(N) = sigma(N)/N in lowest terms
Rational abundancy(const Factorization& f);

Rational parse_rational(std::string_view text);  // "n/d" or "n"

}  // namespace mpverify
