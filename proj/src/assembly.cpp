#include "mpverify/assembly.hpp"

#include "mpverify/constants.hpp"
#include "mpverify/kahan.hpp"
#include "mpverify/prime_sieve.hpp"
#include "mpverify/selberg.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace mpverify {

using nlohmann::json;

SplitThreshold split_threshold_at(const Real& R_value) {
    const ConstantsLedger& L = ConstantsLedger::instance();
    SplitThreshold st;

    const Real e14 = exp(-14 * R_value);  // MPFR exponent range holds 1e-5866
    st.correction_log = log1p(-e14) / 2;
    const Real denom = exp(14 * R_value) - 1;
    st.correction_tail = denom > 0 ? Real(2 / denom) : Real("inf");
    const Real half_log2 = log(Real(2)) / 2;
    st.value = half_log2 + st.correction_log - st.correction_tail;

    CheckReport r = check_ge("split-threshold", st.value, L.split_threshold());
    r.param("half_log2", decimal_string(half_log2));
    r.param("correction_log", decimal_string(st.correction_log));
    r.param("correction_tail", decimal_string(st.correction_tail));

    // both corrections must sit under 1e-5000; verified in log10 domain so
    // the bound itself never touches float limits
    const Real log10_bound = -14 * R_value / log(Real(10));
    const bool corrections_small = log10_bound < -5000;
    r.param("corrections_log10_bound", decimal_string(log10_bound));
    if (!corrections_small) {
        r.pass = false;
        r.note("corrections not provably below 1e-5000 at this R");
    }
    if (!(st.value > L.split_threshold())) r.pass = false;
    st.report = std::move(r);
    return st;
}

SplitThreshold split_threshold() {
    return split_threshold_at(ConstantsLedger::instance().R());
}

Real w_bound(const Real& c, const Real& alpha) {
    if (c <= 0 || alpha <= 0 || alpha > 1)
        throw std::invalid_argument("w_bound: need c > 0 and 0 < alpha <= 1");
    const Real thr = ConstantsLedger::instance().split_threshold();
    return pow(c / (thr * alpha), 1 / alpha);
}

Real tail_sum_chain(const Real& w_log, const Real& c, const Real& alpha) {
    if (w_log <= 0) throw std::invalid_argument("tail_sum_chain: need log w > 0");
    const Real head = c / (alpha * pow(w_log, alpha));
    // 2/(w-1) = 2 e^{-log w} / (1 - e^{-log w}), safe for huge log w
    const Real em = exp(-w_log);
    const Real tail = 2 * em / (1 - em);
    return head + tail;
}

CheckReport abundancy_split_check(const Real& log_w) {
    // h(K) h(L) = 2 / h(p^a) > 2 (1 - e^{-log_w}), so in log domain
    // max(log h(K), log h(L)) > (log 2 + log1p(-e^{-log_w})) / 2
    const Real em = exp(-log_w);
    if (em >= 1) throw std::invalid_argument("abundancy_split_check: need log_w > 0");
    const Real rhs_log = (log(Real(2)) + log1p(-em)) / 2;

    // worst split is even: both parts at exactly half the product
    const Real product_log = log(Real(2)) + log1p(-em);
    const Real max_part = product_log / 2;
    CheckReport r = check_ge("abundancy-split", max_part, rhs_log);
    r.pass = max_part >= rhs_log;  // equality is the degenerate h(p^a)=1 case
    r.param("log_w", decimal_string(log_w));
    r.param("threshold_sqrt", decimal_string(exp(rhs_log)));
    r.note("even split attains the bound; any uneven split pushes the max part higher");
    return r;
}

std::vector<CheckReport> chain_links_check(u64 w, u64 Z, const SumsOptions& opts) {
    if (w < 3 || Z <= w) throw std::invalid_argument("chain_links_check: need 3 <= w < Z");
    std::vector<CheckReport> out;

    Kahan log_h, recip_m1, recip, cross, squares;
    for_each_prime(w, Z, [&](u64 p) {
        const long double pl = static_cast<long double>(p);
        log_h.add(log1pl(1.0L / (pl - 1)));
        recip_m1.add(1.0L / (pl - 1));
        recip.add(1.0L / pl);
        cross.add(1.0L / (pl * (pl - 1)));
        squares.add(1.0L / (pl * pl));
    }, opts.segment_size);

    {
        CheckReport r = check_le("chain-log-h-vs-recip", log_h.value(), recip_m1.value());
        r.param("w", std::to_string(w));
        r.param("Z", std::to_string(Z));
        r.note("sum log h(p) <= sum 1/(p-1) over primes in [w, Z]");
        out.push_back(std::move(r));
    }
    {
        CheckReport r = check_close("chain-split-identity", recip_m1.value(),
                                    recip.value() + cross.value(), 1e-15L);
        r.note("1/(p-1) = 1/p + 1/(p(p-1)) termwise");
        out.push_back(std::move(r));
    }
    {
        const long double scaled =
            (static_cast<long double>(w) / (w - 1)) * squares.value();
        CheckReport r = check_le("chain-cross-vs-squares", cross.value(), scaled);
        r.note("sum 1/(p(p-1)) <= (w/(w-1)) sum 1/p^2 over p >= w");
        out.push_back(std::move(r));
    }
    {
        // truncated square sum plus the integral tail past Z stays under 2/(w-1)
        const long double tail = 1.0L / Z;
        const long double lhs =
            (static_cast<long double>(w) / (w - 1)) * (squares.value() + tail);
        CheckReport r = check_le("chain-two-over-w", lhs, 2.0L / (w - 1));
        r.note("(w/(w-1))(sum_{w<=p<=Z} 1/p^2 + tail bound 1/Z) <= 2/(w-1)");
        out.push_back(std::move(r));
    }
    return out;
}

std::string FinalBoundReport::json_line() const {
    json j;
    j["threshold"] = decimal_string(threshold);
    json cases = json::object();
    for (const auto& [g, e] : case_exponents) cases[std::to_string(g)] = decimal_string(e);
    j["case_exponents"] = cases;
    j["final_exponent"] = decimal_string(final_exponent);
    j["pass"] = pass;
    json checks_j = json::array();
    for (const auto& c : checks) checks_j.push_back(json::parse(c.json_line()));
    j["checks"] = checks_j;
    return j.dump();
}

FinalBoundReport theorem2_pipeline(bool use_statement_constants) {
    const ConstantsLedger& L = ConstantsLedger::instance();
    FinalBoundReport rep;

    // psi5 limit constants must reproduce the ledger values
    for (unsigned g : {2u, 4u}) {
        const auto cc = L.case_g(g);
        const PsiChain chain = psi_chain(g, cc.v);
        CheckReport below = check_le("psi5-under-ledger-g" + std::to_string(g), chain.psi5, cc.c);
        below.param("v", decimal_string(cc.v));
        rep.checks.push_back(std::move(below));
        CheckReport close = check_close("psi5-close-g" + std::to_string(g), chain.psi5, cc.c,
                                        Real("5e-4"));
        rep.checks.push_back(std::move(close));
    }

    // the 0.346573 threshold really sits under (1/2) log(2 - 2e^{-14R})
    SplitThreshold st = split_threshold();
    rep.threshold = st.value;
    rep.checks.push_back(st.report);

    // sieve geometry above e^{14R}
    const Real log_w_floor = 14 * L.R();
    for (unsigned g : {2u, 4u}) {
        auto audit = lemma45_audit(g, log_w_floor);
        rep.checks.insert(rep.checks.end(), audit.begin(), audit.end());
    }

    // per-case exponents and the max
    for (unsigned g : {2u, 4u}) {
        const auto cc = L.case_g(g);
        const Real c = use_statement_constants ? cc.c_statement : cc.c;
        const Real expo = w_bound(c, cc.alpha);
        rep.case_exponents[g] = expo;

        // fixed point: the head of the tail chain at the bound equals the
        // threshold by construction
        const Real head = tail_sum_chain(expo, c, cc.alpha) - 2 * exp(-expo) / (1 - exp(-expo));
        CheckReport fp = check_close("wbound-fixed-point-g" + std::to_string(g), head,
                                     L.split_threshold(), Real("1e-30"));
        rep.checks.push_back(std::move(fp));
    }
    rep.final_exponent = rep.case_exponents.at(2);
    for (const auto& [g, e] : rep.case_exponents)
        if (e > rep.final_exponent) rep.final_exponent = e;

    if (!use_statement_constants) {
        CheckReport upper = check_le("final-exponent-upper", rep.final_exponent,
                                     L.final_exponent() * (1 + Real("1e-4")));
        rep.checks.push_back(std::move(upper));
        CheckReport lower = check_ge("final-exponent-lower", rep.final_exponent, Real("4.97e10"));
        rep.checks.push_back(std::move(lower));
        CheckReport tight = check_close("final-exponent-close", rep.final_exponent,
                                        L.final_exponent(), Real("1e-4"));
        rep.checks.push_back(std::move(tight));
    } else {
        CheckReport note = value_report("final-exponent-statement-variant",
                                        decimal_string(rep.final_exponent));
        note.note("statement-side (alpha, c) variant; differs from the headline value");
        rep.checks.push_back(std::move(note));
    }

    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass &= c.pass;
    return rep;
}

}  // namespace mpverify
