#pragma once

#include "mpverify/prime_sums.hpp"
#include "mpverify/report.hpp"
#include "mpverify/types.hpp"

#include <vector>

namespace mpverify {

// Error-term regimes for |theta(x,15,1) - x/8|, tiling (0, inf) half-open:
//   small    x <= 50          bound x/8
//   table2   50 < x <= 1e10   bound 1.098 sqrt(x)
//   rr_bands 1e10 < x <= e^R  bound (band/8) x, band by magnitude
//   dusart   x > e^R          bound 0.189 x / log x
enum class ThetaRegime { small, table2, rr_bands, dusart };

const char* regime_name(ThetaRegime r);
// log-domain classification (e^R is never materialized)
ThetaRegime regime_for_log(const Real& log_x);
ThetaRegime regime_for(u64 x);
// the regime's own right-hand side at a sieve-reachable x
Real regime_rhs(u64 x);

// |theta(x,15,1) - x/8| <= 0.609 x / log x, with the regime bound in notes
CheckReport check_theta_bound(u64 x, const SumsOptions& opts = {});

// Replays the closed-form constant chains behind B3 = 0.312 / B4 = 0.0572.
// Every line is its own CheckReport so a regression pinpoints the step.
struct B34Result {
    Real phi1_eR_bound;    // (1/8)(log R - log log 60) + 0.883(1/log 60 - 1/R)
    Real upper_constant;   // replayed B4, must be <= 0.0572
    Real lower_constant;   // replayed -B3, must be >= -0.312
    std::vector<CheckReport> steps;
    bool pass = false;
};
B34Result derive_B3_B4();

// Replays the chain behind B2 = 0.12615 (slope exactly 1/8 + 0.00115).
struct B2Result {
    Real chain_constant;  // ~0.9175, must be <= 0.918
    Real slope;           // exactly 0.12615
    std::vector<CheckReport> steps;
    bool pass = false;
};
B2Result derive_B2();

// Tail bound on a synthetic explicit prime set P: given pi_P(x) <= c x /
// log^{1+alpha} x for x > x0 (verified at the jump points), check
// sum_{p in P, p >= w} 1/p <= c / (alpha log^alpha w).  Requires w >= x0.
CheckReport tail_bound_check(const Real& c, const Real& alpha, long double w, long double x0,
                             const std::vector<u64>& P);

// The three classical prime inequalities at a sieve-reachable z:
//   sum_{p<=z} log p / p <= log z
//   prod_{p<=z} (1 - 1/p) <= e^{-gamma}/log z (1 + 1/(2 log^2 z))
//   prod_{p<=z} (1 + 1/p) <= e^{K} log z (1 + 1/log^2 z)   [z > 286 only]
std::vector<CheckReport> check_rs(u64 z, const SumsOptions& opts = {});

}  // namespace mpverify
