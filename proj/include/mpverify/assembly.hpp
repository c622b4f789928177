#pragma once

#include "mpverify/prime_sums.hpp"
#include "mpverify/report.hpp"
#include "mpverify/types.hpp"

#include <map>
#include <vector>

namespace mpverify {

// (1/2) log(2 - 2e^{-14R'}) - 2/(e^{14R'} - 1), kept as a main term plus two
// explicitly bounded corrections so nothing silently rounds away.  R' = R by
// default; other values exercise the guard paths.
struct SplitThreshold {
    Real value;            // main + corrections at working precision
    Real correction_log;   // (1/2) log1p(-e^{-14R'}), negative
    Real correction_tail;  // 2/(e^{14R'} - 1), subtracted
    CheckReport report;    // value > 0.346573, corrections within 1e-5000
};
SplitThreshold split_threshold();
SplitThreshold split_threshold_at(const Real& R_value);

// exponent of the final bound: (c / (0.346573 alpha))^{1/alpha}
Real w_bound(const Real& c, const Real& alpha);

// c/(alpha (log w)^alpha) + 2/(w - 1), evaluated underflow-safe from log w
Real tail_sum_chain(const Real& w_log, const Real& c, const Real& alpha);

// h(p^a) h(K) h(L) = 2 with h(p^a) < 1/(1 - e^{-log_w}) forces
// max(h(K), h(L)) > sqrt(2 - 2 e^{-log_w}); checked in log domain
CheckReport abundancy_split_check(const Real& log_w);

// The sum-over-large-primes chain, link by link, at desk scale with real
// prime data: log(1+1/(p-1)) <= 1/(p-1) = 1/p + 1/(p(p-1)), the tail
// comparison against (w/(w-1)) sum 1/p^2, and the 2/(w-1) cap.
std::vector<CheckReport> chain_links_check(u64 w, u64 Z, const SumsOptions& opts = {});

struct FinalBoundReport {
    Real threshold;
    std::map<unsigned, Real> case_exponents;  // g -> exponent
    Real final_exponent;
    bool pass = false;
    std::vector<CheckReport> checks;
    std::string json_line() const;
};

// End-to-end: psi5 limit constants recomputed and compared to the ledger,
// the split threshold, the per-case w bounds, and the final exponent against
// 4.97401e10.  use_statement_constants swaps in the flagged statement-side
// (alpha, c) variants.
FinalBoundReport theorem2_pipeline(bool use_statement_constants = false);

}  // namespace mpverify
