#include "mpverify/factorization.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>
#include <stdexcept>

namespace mpverify {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for all n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    if (n <= Integer(~0ull)) return is_prime_u64(n.convert_to<u64>());
    static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    return boost::multiprecision::miller_rabin_test(n, 40, rng);
}

Factorization Factorization::from_pairs(std::vector<PrimePower> pairs) {
    Integer last = 1;
    for (const auto& pp : pairs) {
        if (pp.exponent < 1) throw std::invalid_argument("exponent must be >= 1");
        if (pp.prime <= last)
            throw std::invalid_argument("primes must be strictly increasing: " + pp.prime.str());
        if (!is_probable_prime(pp.prime))
            throw std::invalid_argument("not a prime: " + pp.prime.str());
        last = pp.prime;
    }
    Factorization f;
    f.pairs_ = std::move(pairs);
    return f;
}

Factorization Factorization::of_u64(u64 n) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    Factorization f;
    auto push = [&f](u64 p, unsigned e) { f.pairs_.push_back({Integer(p), e}); };
    for (u64 p : {2ull, 3ull, 5ull}) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) push(p, e);
    }
    // wheel-30 trial division
    static const unsigned gaps[8] = {6, 4, 2, 4, 2, 4, 6, 2};
    u64 p = 7;
    unsigned gi = 1;  // 7 -> 11
    while (p * p <= n) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) push(p, e);
        p += gaps[gi];
        gi = (gi + 1) & 7;
    }
    if (n > 1) push(n, 1);
    return f;
}

Factorization Factorization::parse(std::string_view text) {
    if (text == "1") return {};
    std::vector<PrimePower> pairs;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        size_t caret = tok.find('^');
        Integer p(std::string(tok.substr(0, caret == std::string_view::npos ? tok.size() : caret)));
        unsigned e = 1;
        if (caret != std::string_view::npos) e = std::stoul(std::string(tok.substr(caret + 1)));
        pairs.push_back({p, e});
        pos = comma + 1;
    }
    return from_pairs(std::move(pairs));
}

bool Factorization::is_odd() const {
    return pairs_.empty() || pairs_.front().prime != 2;
}

Integer Factorization::value() const {
    Integer n = 1;
    for (const auto& pp : pairs_) n *= pow(pp.prime, pp.exponent);
    return n;
}

std::string Factorization::str() const {
    if (pairs_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (i) s += ",";
        s += pairs_[i].prime.str();
        if (pairs_[i].exponent > 1) s += "^" + std::to_string(pairs_[i].exponent);
    }
    return s;
}

Integer sigma_prime_power(const Integer& p, unsigned e) {
    if (p < 2 || e < 1) throw std::invalid_argument("sigma_prime_power needs p >= 2, e >= 1");
    return (pow(p, e + 1) - 1) / (p - 1);
}

Integer sigma(const Factorization& f) {
    Integer s = 1;
    for (const auto& pp : f.pairs()) s *= sigma_prime_power(pp.prime, pp.exponent);
    return s;
}

Rational prime_power_abundancy(const Integer& p, unsigned e) {
    return Rational(sigma_prime_power(p, e), pow(p, e));
}

Rational abundancy(const Factorization& f) {
    Rational h = 1;
    for (const auto& pp : f.pairs()) h *= prime_power_abundancy(pp.prime, pp.exponent);
    return h;
}

Rational parse_rational(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer n{std::string(text.substr(0, slash))};
    Integer d{std::string(text.substr(slash + 1))};
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
}

}  // namespace mpverify
