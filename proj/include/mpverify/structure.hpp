#pragma once

#include "mpverify/factorization.hpp"
#include "mpverify/report.hpp"
#include "mpverify/types.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mpverify {

// Shape of a multiperfect candidate: s unconstrained prime powers plus
// primes q^(2*beta) with beta drawn from exponent_set; target = n/d.
struct ShapeSpec {
    unsigned s = 0;
    std::set<unsigned> exponent_set;
    Rational target = 2;
};

struct StructureReport {
    std::vector<Integer> P_set;  // primes dividing 2*beta+1 for beta in S
    Integer P_product = 1;
    std::vector<size_t> T_indices;  // q-list positions with q ≡ 1 (mod P_product)
    std::map<unsigned, std::vector<Integer>> Q_beta;
    unsigned omega_P = 0;  // Omega_P of numerator(target), with multiplicity
    unsigned omega = 0;    // distinct prime factors of numerator(target)
    std::map<unsigned, Rational> d_beta;  // prod q/(q-1) per beta, exact
    Rational s_part_abundancy = 1;
    std::vector<PrimePower> s_part;
    Rational target = 2;
    std::vector<std::string> notes;
};

std::vector<Integer> prime_set_P(const std::set<unsigned>& S);

struct EulerCheck {
    bool ok = false;
    std::string diagnosis;
};
// Euler shape: exactly one odd exponent, its prime and exponent both
// ≡ 1 (mod 4), all other exponents even.  Throws on even N.
EulerCheck euler_form_check(const Factorization& f);

// Assigns each prime power of f either to the s-part (caller marks those
// primes) or to Q_beta via exponent = 2*beta, beta in spec.exponent_set.
// Unmarked pairs whose exponent fits some beta always go to Q_beta.
StructureReport classify(const Factorization& f, const ShapeSpec& spec,
                         const std::set<Integer>& s_part_primes = {});

// eq-13 style margin: pass iff s_part_abundancy <= n/d - delta; notes carry
// the threshold mu = n/(n - d*delta) some d_beta must reach.
CheckReport eq13_margin(const StructureReport& rep, const Rational& delta);

}  // namespace mpverify
