#pragma once

#include "mpverify/report.hpp"
#include "mpverify/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mpverify {

// Sifting instance over A = [1, X]: for each listed prime p, members of the
// forbidden residue classes are removed.  rho(p) = |classes[p]|; unlisted
// primes are unsifted.
struct SieveProblem {
    u64 X = 0;
    u64 z = 0;
    u64 w = 0;
    long double D = 0;
    std::map<u64, std::vector<u64>> classes;
    // Caller asserts R_d <= rho(d) for d | P(w) (verified, not assumed, in
    // the soundness harness); E_bound refuses to run without it.
    bool rd_hypothesis = false;

    unsigned rho(u64 p) const;
    void validate() const;  // rho(p) <= p-1, z <= w <= sqrt(D), residues < p

    std::string to_json() const;
    static SieveProblem from_json(const std::string& text);
};

// g(p) = rho/(p - rho)
long double g_of(u64 p, unsigned rho_p);

// V(P(z)) = prod_{p<z} (1 - rho(p)/p)
long double V_of(const SieveProblem& problem, u64 z);

// G_w(x) = sum of multiplicative g over squarefree d | P(w), d <= x
// (d = 1 included).  Budget-guarded DFS; throws when the node budget runs
// out.
long double G_w_of(const SieveProblem& problem, u64 w, long double x,
                   u64 node_budget = 100'000'000);

// E(D, P(w)) <= D prod_{p|P(w)} (1 + rho(p)/p)^3, valid under R_d <= rho(d)
long double E_bound(const SieveProblem& problem, long double D, u64 w);

// psi(B, v) = max(0, v log(v/B) - v + B); psi0 = 1 - exp(-psi(B, v/2))
Real psi(const Real& B, const Real& v);
Real psi0(const Real& B, const Real& v);

struct PsiChain {
    unsigned g = 2;
    Rational kappa;
    Real B;
    Real v;
    bool limit_mode = true;
    Real logX;   // unused in limit mode
    Real logD;   // logX - 4(1+kappa) log(logX)
    Real psi1, psi2, psi4, psi0_v, psi5;
};

// The psi1..psi5 chain for the two sieve cases.  Limit mode drops the
// (v/log D)^2 terms, reproducing the two headline constants; finite mode
// quantifies their size at a given log X.
PsiChain psi_chain(unsigned g, const Real& v, std::optional<Real> logX = std::nullopt);

// log-domain checks behind the chain: sqrt(D) <= 1e-6 X (log X)^{-(1+g/8)}
// and z = D^{1/v} > e^R, both for X > e^{14R}
std::vector<CheckReport> lemma45_audit(unsigned g, const Real& logX);

// S(A, P(w)) <= X/G_w(sqrt D) + E(D, P(w))
long double sieve_upper_bound(const SieveProblem& problem);

// exact count of a in [1, X] avoiding every forbidden class of every prime
// < z, by direct scan
u64 sieve_exact_count(const SieveProblem& problem, u64 cap = 100'000'000);

// the p-1 residues of multiplicative order exactly p mod r (r ≡ 1 mod p);
// together with 0 these are the forbidden classes for the Q_beta sieve
std::vector<u64> order_p_residues(u64 r, u64 p);

}  // namespace mpverify
