#include "mpverify/structure.hpp"

#include <stdexcept>

namespace mpverify {

std::vector<Integer> prime_set_P(const std::set<unsigned>& S) {
    if (S.empty()) throw std::invalid_argument("prime_set_P: empty exponent set");
    std::set<Integer> ps;
    for (unsigned beta : S) {
        u64 m = 2ull * beta + 1;
        for (u64 p = 3; p * p <= m; p += 2) {
            while (m % p == 0) {
                ps.insert(Integer(p));
                m /= p;
            }
        }
        if (m > 1) ps.insert(Integer(m));
    }
    return {ps.begin(), ps.end()};
}

EulerCheck euler_form_check(const Factorization& f) {
    if (!f.is_odd()) throw std::invalid_argument("euler_form_check: N must be odd");
    size_t odd_count = 0;
    const PrimePower* special = nullptr;
    for (const auto& pp : f.pairs()) {
        if (pp.exponent % 2 == 1) {
            ++odd_count;
            special = &pp;
        }
    }
    if (odd_count == 0) return {false, "no odd exponent (N is a square)"};
    if (odd_count > 1)
        return {false, std::to_string(odd_count) + " odd exponents (need exactly one)"};
    if (special->prime % 4 != 1)
        return {false, "special prime " + special->prime.str() + " is not 1 mod 4"};
    if (special->exponent % 4 != 1)
        return {false,
                "special exponent " + std::to_string(special->exponent) + " is not 1 mod 4"};
    return {true, ""};
}

namespace {

// sigma(q^e) mod m via term-by-term modular sums
Integer sigma_prime_power_mod(const Integer& q, unsigned e, const Integer& m) {
    Integer acc = 0, term = 1, qm = q % m;
    for (unsigned i = 0; i <= e; ++i) {
        acc = (acc + term) % m;
        term = (term * qm) % m;
    }
    return acc;
}

}  // namespace

StructureReport classify(const Factorization& f, const ShapeSpec& spec,
                         const std::set<Integer>& s_part_primes) {
    if (spec.exponent_set.empty()) throw std::invalid_argument("classify: empty exponent set");
    if (spec.target <= 1) throw std::invalid_argument("classify: target must exceed 1");

    for (const Integer& p : s_part_primes) {
        bool present = false;
        for (const auto& pp : f.pairs()) present |= pp.prime == p;
        if (!present)
            throw std::invalid_argument("classify: s-part prime " + p.str() +
                                        " does not divide N");
    }

    StructureReport rep;
    rep.target = spec.target;
    rep.P_set = prime_set_P(spec.exponent_set);
    for (const Integer& p : rep.P_set) rep.P_product *= p;
    for (unsigned beta : spec.exponent_set) rep.d_beta[beta] = 1;

    std::vector<std::pair<Integer, unsigned>> q_list;  // (q, beta) in f order
    for (const auto& pp : f.pairs()) {
        if (s_part_primes.count(pp.prime)) {
            rep.s_part.push_back(pp);
            rep.s_part_abundancy *= prime_power_abundancy(pp.prime, pp.exponent);
            continue;
        }
        const unsigned beta = pp.exponent / 2;
        if (pp.exponent % 2 != 0 || !spec.exponent_set.count(beta))
            throw std::invalid_argument("classify: cannot place " + pp.prime.str() + "^" +
                                        std::to_string(pp.exponent) +
                                        " (exponent not 2*beta for beta in S, and prime not "
                                        "marked as s-part)");
        rep.Q_beta[beta].push_back(pp.prime);
        rep.d_beta[beta] *= Rational(pp.prime, pp.prime - 1);
        q_list.emplace_back(pp.prime, beta);
    }
    if (rep.s_part.size() > spec.s)
        throw std::invalid_argument("classify: " + std::to_string(rep.s_part.size()) +
                                    " s-part primes marked but spec allows " +
                                    std::to_string(spec.s));

    for (size_t i = 0; i < q_list.size(); ++i)
        if (q_list[i].first % rep.P_product == 1) rep.T_indices.push_back(i);

    // Omega_P and omega of the target numerator
    Integer n = numerator(spec.target);
    if (n > Integer(~0ull)) throw std::invalid_argument("classify: target numerator too large");
    const Factorization nf = Factorization::of_u64(n.convert_to<u64>());
    rep.omega = static_cast<unsigned>(nf.pairs().size());
    for (const auto& pp : nf.pairs())
        for (const Integer& p : rep.P_set)
            if (pp.prime == p) rep.omega_P += pp.exponent;

    // For q ≡ 1 (mod P): sigma(q^(2b)) is divisible by 2b+1.  The mod-2b
    // variant fails in general (q=7, b=1: sigma(49)=57 is odd), so the
    // 2b+1 form is what gets verified here.
    for (size_t i : rep.T_indices) {
        const auto& [q, beta] = q_list[i];
        const Integer m = 2 * Integer(beta) + 1;
        const Integer r = sigma_prime_power_mod(q, 2 * beta, m);
        if (r != 0)
            throw std::logic_error("classify: divisibility sigma(q^2b) mod (2b+1) failed for q=" +
                                   q.str());
    }
    if (!rep.T_indices.empty())
        rep.notes.push_back("T nonempty: sigma(q^(2b)) ≡ 0 (mod 2b+1) verified for all " +
                            std::to_string(rep.T_indices.size()) +
                            " T-primes (divisibility by 2b does not hold in general)");
    return rep;
}

CheckReport eq13_margin(const StructureReport& rep, const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("eq13_margin: delta must be positive");
    const Rational bound = rep.target - delta;
    CheckReport r = check_le("eq13-margin", rep.s_part_abundancy, bound);
    r.param("delta", rational_string(delta));
    r.param("target", rational_string(rep.target));
    const Integer n = numerator(rep.target), d = denominator(rep.target);
    const Rational ndd = Rational(n) - Rational(d) * delta;
    if (ndd > 0) {
        const Rational mu = Rational(n) / ndd;
        r.param("mu", rational_string(mu));
        r.note("some d_beta must reach mu for a solution to exist");
    } else {
        r.note("n - d*delta <= 0: no finite mu threshold");
    }
    return r;
}

}  // namespace mpverify
