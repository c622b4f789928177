#include "mpverify/constants.hpp"

#include <stdexcept>

namespace mpverify {

namespace {

// decimal strings so every access materializes at the working precision
constexpr const char* kR = "964.5908801";
constexpr const char* kGamma = "0.57721566490153286060651209008240243104215933593992";
constexpr const char* kMertens = "0.26149721284764278375542683860869585905156664826120";
constexpr const char* kK = "0.2615";
constexpr const char* kThetaMain = "0.609";
constexpr const char* kDusart = "0.189";
constexpr const char* kRRSqrt = "1.098";
constexpr const char* kBand30 = "0.008634";
constexpr const char* kBand100 = "0.007088";
constexpr const char* kBandTop = "0.005045";
constexpr const char* kB2 = "0.12615";
constexpr const char* kB3 = "0.312";
constexpr const char* kB4 = "0.0572";
constexpr const char* kSplit = "0.346573";
constexpr const char* kFinal = "4.97401e10";

}  // namespace

const ConstantsLedger& ConstantsLedger::instance() {
    static const ConstantsLedger ledger;
    return ledger;
}

Real ConstantsLedger::R() const { return Real(kR); }
Real ConstantsLedger::gamma() const { return Real(kGamma); }
Real ConstantsLedger::mertens_const() const { return Real(kMertens); }
Real ConstantsLedger::K_const() const { return Real(kK); }
Real ConstantsLedger::theta_main() const { return Real(kThetaMain); }
Real ConstantsLedger::theta_large() const { return Real(kBand30) / 8; }
Real ConstantsLedger::dusart() const { return Real(kDusart); }
Real ConstantsLedger::rr_sqrt() const { return Real(kRRSqrt); }
Real ConstantsLedger::rr_band_30() const { return Real(kBand30); }
Real ConstantsLedger::rr_band_100() const { return Real(kBand100); }
Real ConstantsLedger::rr_band_top() const { return Real(kBandTop); }

Real ConstantsLedger::B1() const { return Real(1); }
Real ConstantsLedger::B2() const { return Real(kB2); }
Real ConstantsLedger::B3() const { return Real(kB3); }
Real ConstantsLedger::B4() const { return Real(kB4); }
Rational ConstantsLedger::B5() const { return Rational(31, 30); }

Real ConstantsLedger::B6(const Real& log_z) const {
    return exp(-gamma()) * (1 + 1 / (2 * log_z * log_z));
}

Real ConstantsLedger::B7(const Real& log_z) const {
    return exp(K_const()) * (1 + 1 / (log_z * log_z));
}

Real ConstantsLedger::split_threshold() const { return Real(kSplit); }
Real ConstantsLedger::final_exponent() const { return Real(kFinal); }

ConstantsLedger::CaseConsts ConstantsLedger::case_g(unsigned g) const {
    if (g != 2 && g != 4) throw std::invalid_argument("case_g: g must be 2 or 4");
    CaseConsts c;
    c.g = g;
    c.kappa = Rational(g, 8);
    c.B = 1 + Real(kB2) * g;
    c.alpha = real_from(c.kappa);
    if (g == 2) {
        c.v = Real("7.019");
        c.c = Real("40.9177");
        c.c_statement = Real("40.8778");
    } else {
        c.v = Real("7.536");
        c.c = Real("187.083");
        c.c_statement = Real("185.976");
    }
    return c;
}

std::vector<LedgerEntry> ConstantsLedger::entries() const {
    return {
        {"R", kR, "pinned log-scale split point; e^R separates the error regimes"},
        {"gamma", kGamma, "trusted external: Euler-Mascheroni constant"},
        {"mertens_const", kMertens, "trusted external: Mertens constant (test tolerance use)"},
        {"K", kK, "trusted external upper bound for the 1+1/p product constant"},
        {"theta_main", kThetaMain, "trusted external: |theta(x,15,1)-x/8| <= 0.609x/log x"},
        {"dusart", kDusart, "trusted external: error coefficient for x >= e^R"},
        {"rr_sqrt", kRRSqrt, "trusted external: 1.098 sqrt(x) band for 50 < x <= 1e10"},
        {"rr_band_30", kBand30, "trusted external: relative band /8 for 1e10 < x <= 1e30"},
        {"rr_band_100", kBand100, "trusted external: relative band /8 for 1e30 < x <= 1e100"},
        {"rr_band_top", kBandTop, "trusted external: relative band /8 for x > 1e100"},
        {"B1", "1", "sum log p / p <= log z"},
        {"B2", kB2, "slope for sum over p ≡ 1 (15) of log p / p; derived chain replays it"},
        {"B3", kB3, "lower constant for sum over p ≡ 1 (15) of 1/p"},
        {"B4", kB4, "upper constant for sum over p ≡ 1 (15) of 1/p"},
        {"B5", "31/30", "exact: all primes ≡ 1 (mod 15) lie in U with at most one exception"},
        {"B6", "e^{-gamma}(1+1/(2 log^2 z))", "z-dependent Mertens bound factor"},
        {"B7", "e^{K}(1+1/log^2 z)", "z-dependent 1+1/p product factor"},
        {"split_threshold", kSplit, "rounded threshold below (1/2)log(2-2e^{-14R})"},
        {"final_exponent", kFinal, "target bound exponent 4.97401e10"},
        {"g2", "kappa=1/4 B=1.2523 v=7.019 c=40.9177 alpha=1/4",
         "exponent-2 sieve case; c from the proof-side evaluation"},
        {"g2_statement_c", "40.8778", "statement-side variant; flagged internal discrepancy"},
        {"g4", "kappa=1/2 B=1.5046 v=7.536 c=187.083 alpha=1/2",
         "exponent-4 sieve case; c from the proof-side evaluation"},
        {"g4_statement_c", "185.976", "statement-side variant; flagged internal discrepancy"},
    };
}

}  // namespace mpverify
