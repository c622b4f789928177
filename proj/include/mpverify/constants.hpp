#pragma once

#include "mpverify/types.hpp"

#include <string>
#include <vector>

namespace mpverify {

struct LedgerEntry {
    std::string name;
    std::string value;
    std::string provenance;
};

// Every named constant in the bound pipeline, each with a provenance note.
// Values are stored as decimal strings and materialized at the current
// working precision on access; B5 is exact rational.
class ConstantsLedger {
  public:
    static const ConstantsLedger& instance();

    Real R() const;             // 964.5908801
    Real gamma() const;         // Euler-Mascheroni, trusted external
    Real mertens_const() const; // 0.2614972..., trusted external (desk checks)
    Real K_const() const;       // 0.2615, upper bound used in the 1+1/p product
    Real theta_main() const;    // 0.609   |theta(x,15,1) - x/8| <= 0.609 x/log x
    Real theta_large() const;   // 0.008634/8 coefficient band, x >= 1e10
    Real dusart() const;        // 0.189   error coefficient for x >= e^R
    Real rr_sqrt() const;       // 1.098   sqrt(x) band, 50 < x <= 1e10
    Real rr_band_30() const;    // 0.008634 (1e10 < x <= 1e30)
    Real rr_band_100() const;   // 0.007088 (1e30 < x <= 1e100)
    Real rr_band_top() const;   // 0.005045 (x > 1e100)

    Real B1() const;            // 1
    Real B2() const;            // 0.12615
    Real B3() const;            // 0.312
    Real B4() const;            // 0.0572
    Rational B5() const;        // 31/30 exact
    Real B6(const Real& log_z) const;  // e^{-gamma} (1 + 1/(2 log^2 z))
    Real B7(const Real& log_z) const;  // e^{K} (1 + 1/log^2 z)

    Real split_threshold() const;   // 0.346573
    Real final_exponent() const;    // 4.97401e10

    struct CaseConsts {
        unsigned g = 2;
        Rational kappa;     // g/8
        Real B;             // 1 + 0.12615 g
        Real v;             // 7.019 / 7.536
        Real c;             // 40.9177 / 187.083 (proof-side, authoritative)
        Real c_statement;   // 40.8778 / 185.976 (statement-side variant)
        Real alpha;         // = kappa
    };
    CaseConsts case_g(unsigned g) const;

    std::vector<LedgerEntry> entries() const;
};

}  // namespace mpverify
