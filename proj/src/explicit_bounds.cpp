#include "mpverify/explicit_bounds.hpp"

#include "mpverify/constants.hpp"
#include "mpverify/kahan.hpp"
#include "mpverify/prime_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpverify {

const char* regime_name(ThetaRegime r) {
    switch (r) {
        case ThetaRegime::small: return "small";
        case ThetaRegime::table2: return "table2";
        case ThetaRegime::rr_bands: return "rr_bands";
        case ThetaRegime::dusart: return "dusart";
    }
    return "?";
}

ThetaRegime regime_for_log(const Real& log_x) {
    const ConstantsLedger& L = ConstantsLedger::instance();
    if (log_x <= log(Real(50))) return ThetaRegime::small;
    if (log_x <= 10 * log(Real(10))) return ThetaRegime::table2;
    if (log_x <= L.R()) return ThetaRegime::rr_bands;
    return ThetaRegime::dusart;
}

ThetaRegime regime_for(u64 x) {
    if (x <= 50) return ThetaRegime::small;
    if (x <= 10'000'000'000ull) return ThetaRegime::table2;
    return regime_for_log(log(Real(Integer(x))));
}

Real regime_rhs(u64 x) {
    const ConstantsLedger& L = ConstantsLedger::instance();
    const Real xr = real_from_u64(x);
    switch (regime_for(x)) {
        case ThetaRegime::small: return xr / 8;
        case ThetaRegime::table2: return L.rr_sqrt() * sqrt(xr);
        case ThetaRegime::rr_bands: {
            const Real lx = log(xr);
            Real band = L.rr_band_30();
            if (lx > 100 * log(Real(10))) band = L.rr_band_top();
            else if (lx > 30 * log(Real(10))) band = L.rr_band_100();
            return band / 8 * xr;
        }
        case ThetaRegime::dusart: return L.dusart() * xr / log(xr);
    }
    return 0;
}

CheckReport check_theta_bound(u64 x, const SumsOptions& opts) {
    if (x == 0) throw std::invalid_argument("check_theta_bound: need x >= 1");
    const ConstantsLedger& L = ConstantsLedger::instance();
    const long double th = theta(x, APQuery{15, 1}, opts);
    const long double lhs = std::fabs(th - static_cast<long double>(x) / 8);
    const long double lx = logl(static_cast<long double>(x));
    const long double main_coeff = L.theta_main().convert_to<long double>();
    const long double rhs =
        x == 1 ? std::numeric_limits<long double>::infinity() : main_coeff * x / lx;

    CheckReport r = check_le("theta-bound", lhs, rhs);
    r.param("x", std::to_string(x));
    r.param("theta", decimal_string(th));
    const ThetaRegime reg = regime_for(x);
    r.param("regime", regime_name(reg));
    const Real reg_rhs = regime_rhs(x);
    r.param("regime_rhs", decimal_string(reg_rhs));
    r.param("regime_pass", Real(lhs) <= reg_rhs ? "true" : "false");
    if (x >= 10'000'000'000ull) {
        const Real large = L.theta_large() * real_from_u64(x);
        r.param("large_x_rhs", decimal_string(large));
        r.param("large_x_pass", Real(lhs) <= large ? "true" : "false");
    }
    return r;
}

B34Result derive_B3_B4() {
    const ConstantsLedger& L = ConstantsLedger::instance();
    B34Result res;

    const Real R = L.R();
    const Real log60 = log(Real(60));
    const Real loglog60 = log(log60);
    const Real logR = log(R);
    const Real log31 = log(Real(31));
    const Real c609 = L.theta_main();
    const Real c189 = L.dusart();

    // exact antiderivative value of the phi1 integral over [60, e^R] with
    // the 0.609 error coefficient, against its bundled closed form
    {
        const Real exact = (Real(1) / 8) * ((1 / log60 - 1 / R) + (logR - loglog60)) +
                           c609 * ((1 / (2 * log60 * log60) - 1 / (2 * R * R)) +
                                   (1 / log60 - 1 / R));
        res.phi1_eR_bound =
            (Real(1) / 8) * (logR - loglog60) + Real("0.883") * (1 / log60 - 1 / R);
        CheckReport r = check_le("b34-phi1-eR-bundle", exact, res.phi1_eR_bound);
        r.note("integral terms with the 0.609 coefficient fit under the 0.883 bundle");
        res.steps.push_back(std::move(r));
    }
    // continuation bundle over [e^R, z]: (1/8 + 0.189) and the half-0.189
    // quadratic term fit under 0.315, worst case log z = R
    {
        const Real lhs = (Real(1) / 8 + c189) + (c189 / 2) * (2 / R);
        CheckReport r = check_le("b34-eq431-bundle", lhs, Real("0.315"));
        r.note("coefficient check for the [e^R, z] continuation of phi1");
        res.steps.push_back(std::move(r));
    }
    // the z-dependent leftovers 1/(8u) + 0.189/u^2 - 0.315/u are <= 0 for
    // every u = log z >= R, so the constant term alone bounds the chain
    {
        const Real lhs = c189 / R;
        CheckReport r = check_le("b34-ztail-nonpositive", lhs, Real("0.19"));
        r.note("1/(8u) - 0.315/u + 0.189/u^2 <= 0 for u >= R once 0.189/u <= 0.19");
        res.steps.push_back(std::move(r));
    }
    // upper constant: sum_{p<=z,p≡1(15)} 1/p - (1/8) log log z is bounded by
    // this z-free value for every z > e^R
    {
        res.upper_constant = -(Real(1) / 8) * loglog60 + Real("0.883") / log60 -
                             Real("0.568") / R - log31 / (60 * log60) + Real(1) / 31;
        CheckReport r = check_le("b34-upper-constant", res.upper_constant, L.B4());
        r.note("replayed B4");
        res.steps.push_back(std::move(r));
    }
    // lower constant: regime-wise lower bounds on theta inside the phi1
    // integral; theta(z)/(z log z) and the +1/(8 log z) term are dropped
    // (both nonnegative)
    {
        const Real E1 = L.rr_sqrt() * (1 / (log60 * log60) + 1 / log60) * (2 / sqrt(Real(60)));
        const Real log1e10 = 10 * log(Real(10));
        const Real E2 =
            (L.rr_band_30() / 8) * ((logR - 1 / R) - (log(log1e10) - 1 / log1e10));
        const Real E3 = c189 * (1 / (2 * R * R) + 1 / R);
        res.lower_constant = -log31 / (60 * log60) + Real(1) / 31 -
                             (Real(1) / 8) * loglog60 - (Real(1) / 8) / log60 - E1 - E2 - E3;
        CheckReport r = check_ge("b34-lower-constant", res.lower_constant, -L.B3());
        r.param("E_sqrt_band", decimal_string(E1));
        r.param("E_rr_band", decimal_string(E2));
        r.param("E_dusart", decimal_string(E3));
        r.note("replayed -B3");
        res.steps.push_back(std::move(r));
    }

    res.pass = true;
    for (const auto& s : res.steps) res.pass &= s.pass;
    return res;
}

B2Result derive_B2() {
    const ConstantsLedger& L = ConstantsLedger::instance();
    B2Result res;

    const Real R = L.R();
    const Real log31 = log(Real(31));
    const Real log1e10 = 10 * log(Real(10));
    const Real c189 = L.dusart();
    const Real band = L.rr_band_30();  // 0.008634
    const Real coeff196 = Real("0.000196");

    // sqrt band stretched down to t = 31: theta(t,15,1) = log 31 on [31, 50],
    // both one-sided worst cases hold
    {
        CheckReport a = check_le("b2-sqrt-band-31", log31 - Real(31) / 8,
                                 L.rr_sqrt() * sqrt(Real(31)));
        a.note("log 31 - t/8 <= 1.098 sqrt(t) at t = 31, decreasing left side");
        res.steps.push_back(std::move(a));
        CheckReport b = check_le("b2-sqrt-band-50", Real(50) / 8 - log31,
                                 L.rr_sqrt() * sqrt(Real(50)));
        b.note("t/8 - log 31 <= 1.098 sqrt(t) at t = 50, increasing left side");
        res.steps.push_back(std::move(b));
    }
    // 0.189/log t <= 0.000196 on [e^R, z]
    {
        CheckReport r = check_le("b2-dusart-slope-coeff", c189 / R, coeff196);
        r.note("the [e^R, z] integrand slope absorbs into 1/8 + 0.000196");
        res.steps.push_back(std::move(r));
    }
    // chain constant: the z-free part of the phi2 bound plus the theta(z)/z
    // term, must fit under 0.918
    {
        const Real slope = Real(1) / 8 + coeff196;
        const Real P1 = (Real(1) / 8) * (log1e10 - log31) +
                        Real("2.196") * (1 / sqrt(Real(31)) - Real(1) / 100000);
        const Real P2 = ((1 + band) / 8) * (R - log1e10);
        res.chain_constant = slope * (1 - R) + P1 + P2;
        CheckReport r = check_le("b2-chain-constant", res.chain_constant, Real("0.918"));
        r.param("P1_31_to_1e10", decimal_string(P1));
        r.param("P2_1e10_to_eR", decimal_string(P2));
        res.steps.push_back(std::move(r));
    }
    // 0.918 absorbs into the slope bump: 0.918/R <= 0.00115 - 0.000196
    {
        CheckReport r = check_le("b2-final-absorb", Real("0.918") / R,
                                 Real("0.00115") - coeff196);
        res.steps.push_back(std::move(r));
    }
    // slope identity, exact in rationals
    {
        const Rational lhs = Rational(1, 8) + Rational(115, 100000);
        const Rational rhs = Rational(12615, 100000);
        CheckReport r = check_le("b2-slope-exact", lhs, rhs);
        r.pass = lhs == rhs;
        r.note("1/8 + 0.00115 = 0.12615 exactly");
        res.steps.push_back(std::move(r));
        res.slope = real_from(rhs);
    }

    res.pass = true;
    for (const auto& s : res.steps) res.pass &= s.pass;
    return res;
}

CheckReport tail_bound_check(const Real& c, const Real& alpha, long double w, long double x0,
                             const std::vector<u64>& P) {
    if (c <= 0 || alpha <= 0 || alpha > 1)
        throw std::invalid_argument("tail_bound_check: need c > 0 and 0 < alpha <= 1");
    if (w < x0)
        throw std::invalid_argument("tail_bound_check: requires w >= x0 (the density "
                                    "hypothesis only holds above x0)");
    std::vector<u64> ps = P;
    std::sort(ps.begin(), ps.end());

    // density precondition at the jump points above x0; between jumps the
    // right side is increasing (x > e^{1+alpha}), so this is enough
    const long double a = alpha.convert_to<long double>();
    const long double cc = c.convert_to<long double>();
    u64 count = 0;
    for (u64 p : ps) {
        ++count;
        if (static_cast<long double>(p) <= x0) continue;
        const long double rhs = cc * p / powl(logl(static_cast<long double>(p)), 1 + a);
        if (static_cast<long double>(count) > rhs)
            throw std::invalid_argument("tail_bound_check: density precondition fails at p = " +
                                        std::to_string(p));
    }

    Kahan sum;
    for (u64 p : ps)
        if (static_cast<long double>(p) >= w) sum.add(1.0L / p);
    const Real lhs(decimal_string(sum.value()));
    const Real rhs = c / (alpha * pow(Real(decimal_string(w)), alpha));
    CheckReport r = check_le("tail-bound", lhs, rhs);
    r.param("c", decimal_string(c));
    r.param("alpha", decimal_string(alpha));
    r.param("w", decimal_string(w));
    r.param("set_size", std::to_string(ps.size()));
    return r;
}

std::vector<CheckReport> check_rs(u64 z, const SumsOptions& opts) {
    if (z < 3) throw std::invalid_argument("check_rs: need z >= 3");
    const ConstantsLedger& L = ConstantsLedger::instance();
    std::vector<CheckReport> out;

    const APSums sums = ap_sums(z, APQuery{}, opts);
    const auto [prod_minus, prod_plus] = mertens_products(z, opts);
    const long double lz = logl(static_cast<long double>(z));

    {
        CheckReport r = check_le("rs-logp-over-p", sums.logp_over_p, lz);
        r.param("z", std::to_string(z));
        out.push_back(std::move(r));
    }
    {
        const long double gamma = L.gamma().convert_to<long double>();
        const long double rhs = expl(-gamma) / lz * (1.0L + 1.0L / (2 * lz * lz));
        CheckReport r = check_le("rs-mertens-minus", prod_minus, rhs);
        r.param("z", std::to_string(z));
        if (!r.pass)
            r.note("asserted in the stated upper-bound form; the classical source is usually "
                   "quoted in the opposite direction");
        out.push_back(std::move(r));
    }
    if (z > 286) {
        const long double K = L.K_const().convert_to<long double>();
        const long double rhs = expl(K) * lz * (1.0L + 1.0L / (lz * lz));
        CheckReport r = check_le("rs-mertens-plus", prod_plus, rhs);
        r.param("z", std::to_string(z));
        out.push_back(std::move(r));
    } else {
        CheckReport r = value_report("rs-mertens-plus", decimal_string(prod_plus));
        r.param("z", std::to_string(z));
        r.note("skipped: the 1+1/p bound needs z > 286");
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mpverify
