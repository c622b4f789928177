// Acceptance suite: every release gate in one binary, one PASS/FAIL line per
// criterion.  Exit code is the number of failed criteria.

#include "mpverify/assembly.hpp"
#include "mpverify/constants.hpp"
#include "mpverify/delta.hpp"
#include "mpverify/explicit_bounds.hpp"
#include "mpverify/factorization.hpp"
#include "mpverify/multiperfect.hpp"
#include "mpverify/prime_sums.hpp"
#include "mpverify/selberg.hpp"
#include "mpverify/structure.hpp"

#include "oracles.hpp"
#include "sieve_harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

using namespace mpverify;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    const char* summary;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void finish(bool pass, const std::string& detail) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s — %s (%s; %.2fs)\n", id, pass ? "PASS" : "FAIL", summary,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!pass) ++g_failures;
    }
};

std::string real3(const Real& x) { return x.str(6, std::ios_base::scientific); }

void criterion1_final_bound() {
    Criterion c{1, "final bound reproduces exp(4.97401e10) within 1e-4 relative"};
    const FinalBoundReport rep = theorem2_pipeline();
    const Real target = ConstantsLedger::instance().final_exponent();
    const Real rel = abs(rep.final_exponent - target) / target;
    c.finish(rep.pass && rel <= Real("1e-4"),
             "exponent " + real3(rep.final_exponent) + ", rel diff " + real3(rel));
}

void criterion2_psi5() {
    Criterion c{2, "limit-mode psi5 lands under 40.9177 / 187.083 within 5e-4"};
    bool pass = true;
    std::string detail;
    for (unsigned g : {2u, 4u}) {
        const auto cc = ConstantsLedger::instance().case_g(g);
        const PsiChain chain = psi_chain(g, cc.v);
        const Real rel = abs(chain.psi5 - cc.c) / cc.c;
        pass &= chain.psi5 <= cc.c && rel <= Real("5e-4");
        if (!detail.empty()) detail += ", ";
        detail += "g" + std::to_string(g) + ": " + real3(chain.psi5) + " (rel " + real3(rel) + ")";
    }
    c.finish(pass, detail);
}

void criterion3_constant_chains() {
    Criterion c{3, "B3/B4/B2 chains replay with their printed constants"};
    const B34Result b34 = derive_B3_B4();
    const B2Result b2 = derive_B2();
    const bool pass = b34.pass && b2.pass && b34.upper_constant <= Real("0.0572") &&
                      b34.lower_constant >= Real("-0.312") && b2.slope == Real("0.12615");
    c.finish(pass, "upper " + real3(b34.upper_constant) + ", lower " +
                       real3(b34.lower_constant) + ", slope " + real3(b2.slope));
}

void criterion4_theta_audit() {
    Criterion c{4, "|theta(x,15,1) - x/8| <= 0.609x/log x at 1e3..1e8 and exactly for x <= 50"};
    const Real coeff = ConstantsLedger::instance().theta_main();
    const long double c609 = coeff.convert_to<long double>();

    bool pass = true;
    // small regime, exact: theta jumps only at 31 here
    for (u64 x = 2; x <= 50; ++x) {
        const long double th = x >= 31 ? logl(31.0L) : 0.0L;
        const long double lhs = std::fabs(th - static_cast<long double>(x) / 8);
        pass &= lhs <= static_cast<long double>(x) / 8 + 1e-18L;
        pass &= lhs <= c609 * x / logl(static_cast<long double>(x));
    }

    std::vector<u64> xs;
    for (u64 x = 1000; x <= 100'000'000ull; x *= 10) xs.push_back(x);
    const auto rows = theta_profile(xs, APQuery{15, 1});
    long double worst_margin = 1e30L;
    u64 worst_x = 0;
    for (const auto& row : rows) {
        const long double lhs = std::fabs(row.theta - static_cast<long double>(row.x) / 8);
        const long double rhs = c609 * row.x / logl(static_cast<long double>(row.x));
        if (rhs - lhs < worst_margin) {
            worst_margin = rhs - lhs;
            worst_x = row.x;
        }
        pass &= lhs <= rhs;
    }

    // the sieve behind the audit agrees with an independent simple sieve
    const auto all = theta_profile({100'000'000ull}, APQuery{});
    const u64 pi_independent = oracle::naive_primes(100'000'000ull).size();
    pass &= all.front().pi == pi_independent && pi_independent == 5'761'455ull;

    c.finish(pass, "checkpoints " + std::to_string(rows.size()) + ", tightest margin " +
                       decimal_string(worst_margin).substr(0, 12) + " at x = " +
                       std::to_string(worst_x) + ", pi(1e8) = " +
                       std::to_string(pi_independent) + " cross-checked");
}

void criterion5_partial_summation() {
    Criterion c{5, "partial-summation identities hold to 1e-9 relative at z = 1e3..1e6"};
    bool pass = true;
    long double worst = 0;
    for (u64 z : {1000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
        const APSums s = ap_sums(z, APQuery{15, 1});
        const long double zl = static_cast<long double>(z);
        const long double rhs1 = s.theta / (zl * logl(zl)) - logl(31.0L) / (60 * logl(60.0L)) +
                                 1.0L / 31 + phi1(zl);
        const long double rhs2 = s.theta / zl + phi2(zl);
        const long double rel1 = std::fabs(s.recip - rhs1) / s.recip;
        const long double rel2 = std::fabs(s.logp_over_p - rhs2) / s.logp_over_p;
        worst = std::max({worst, rel1, rel2});
        pass &= rel1 <= 1e-9L && rel2 <= 1e-9L;
    }
    c.finish(pass, "worst relative deviation " + decimal_string(worst).substr(0, 12));
}

void criterion6_sieve_soundness() {
    Criterion c{6, "exact count <= Selberg bound on randomized instances"};
    std::mt19937_64 rng(0xACCE97ull);
    bool pass = true;
    int count = 0;
    long double tightest = 1e30L;
    for (int iter = 0; iter < 120; ++iter) {
        SieveProblem prob = harness::random_problem(rng);  // verifies R_d exactly
        const u64 exact = sieve_exact_count(prob);
        const long double bound = sieve_upper_bound(prob);
        pass &= static_cast<long double>(exact) <= bound;
        tightest = std::min(tightest, bound / std::max<long double>(exact, 1));
        ++count;
    }
    c.finish(pass, std::to_string(count) + " problems, smallest bound/exact ratio " +
                       decimal_string(tightest).substr(0, 8));
}

void criterion7_multiperfect() {
    Criterion c{7, "multiperfect search and sigma agree with brute force up to 1e5"};
    const auto table = oracle::divisor_sigma_table(100'000);
    bool pass = true;
    for (u64 n = 1; n <= 100'000; ++n)
        pass &= sigma(Factorization::of_u64(n)) == table[n];
    pass &= search_multiperfect(100'000, Rational(2)) == std::vector<u64>{6, 28, 496, 8128};
    pass &= search_multiperfect(100'000, Rational(3)) == std::vector<u64>{120, 672};
    c.finish(pass, "sigma verified for 1e5 integers; h=2 and h=3 lists exact");
}

void criterion8_delta() {
    Criterion c{8, "delta base cases and the odd prime-power gap h(p^e) <= 2 - 1/4"};
    bool pass = delta_base(2) == Rational(1, 4);
    for (u64 p : {3ull, 5ull, 11ull, 101ull, 9973ull}) {
        pass &= delta_recursive({1, 2, 1, {p}}).value ==
                Rational(Integer(1), Integer(4) * (Integer(p) - 1));
    }
    const Rational ceiling = Rational(2) - Rational(1, 4);
    u64 checked = 0;
    for (u64 p : oracle::naive_primes(10'000)) {
        if (p == 2) continue;
        for (unsigned e = 1; e <= 64; ++e) {
            pass &= prime_power_abundancy(Integer(p), e) <= ceiling;
            ++checked;
        }
    }
    c.finish(pass, std::to_string(checked) + " prime powers checked exactly");
}

void criterion9_kappa_substitute() {
    Criterion c{9, "general-S constant substituted by property suites plus kappa wiring"};
    // the full Theorem-1 constant lives above e^R; criteria 6 and 8 plus this
    // wiring check stand in for it at desk scale
    bool pass = psi_chain(2, Real(7)).kappa == Rational(1, 4) &&
                psi_chain(4, Real(7)).kappa == Rational(1, 2);
    pass &= 1 + Rational(1, 4) == Rational(5, 4) && 1 + Rational(1, 2) == Rational(3, 2);
    // kappa = (p-1)/phi(15) with P({2,4}) = {3,5}
    std::vector<Integer> expected{Integer(3), Integer(5)};
    pass &= prime_set_P({2, 4}) == expected;
    c.finish(pass, "1+kappa pairs (5/4, 3/2) wired through the psi chain");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_final_bound();
    criterion2_psi5();
    criterion3_constant_chains();
    criterion4_theta_audit();
    criterion5_partial_summation();
    criterion6_sieve_soundness();
    criterion7_multiperfect();
    criterion8_delta();
    criterion9_kappa_substitute();
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures;
}
