#include "mpverify/selberg.hpp"

#include "mpverify/constants.hpp"
#include "mpverify/factorization.hpp"
#include "mpverify/prime_sieve.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpverify {

using nlohmann::json;

unsigned SieveProblem::rho(u64 p) const {
    auto it = classes.find(p);
    return it == classes.end() ? 0 : static_cast<unsigned>(it->second.size());
}

void SieveProblem::validate() const {
    if (X == 0) throw std::invalid_argument("SieveProblem: X must be positive");
    if (!(z <= w)) throw std::invalid_argument("SieveProblem: need z <= w");
    if (D > 0 && !(static_cast<long double>(w) * w <= D))
        throw std::invalid_argument("SieveProblem: need w <= sqrt(D)");
    for (const auto& [p, cls] : classes) {
        if (!is_prime_u64(p))
            throw std::invalid_argument("SieveProblem: " + std::to_string(p) + " is not prime");
        if (cls.size() > p - 1)
            throw std::invalid_argument("SieveProblem: rho(p) > p-1 for p = " +
                                        std::to_string(p));
        std::vector<u64> sorted = cls;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("SieveProblem: duplicate residue mod " +
                                        std::to_string(p));
        for (u64 r : cls)
            if (r >= p)
                throw std::invalid_argument("SieveProblem: residue " + std::to_string(r) +
                                            " out of range mod " + std::to_string(p));
    }
}

std::string SieveProblem::to_json() const {
    json j;
    j["X"] = X;
    j["z"] = z;
    j["w"] = w;
    j["D"] = static_cast<double>(D);
    json cls = json::object();
    for (const auto& [p, v] : classes) cls[std::to_string(p)] = v;
    j["classes"] = cls;
    j["rd_hypothesis"] = rd_hypothesis;
    return j.dump();
}

SieveProblem SieveProblem::from_json(const std::string& text) {
    const json j = json::parse(text);
    SieveProblem p;
    p.X = j.at("X").get<u64>();
    p.z = j.at("z").get<u64>();
    p.w = j.at("w").get<u64>();
    p.D = j.value("D", 0.0);
    if (j.contains("classes"))
        for (const auto& [key, v] : j.at("classes").items())
            p.classes[std::stoull(key)] = v.get<std::vector<u64>>();
    p.rd_hypothesis = j.value("rd_hypothesis", false);
    p.validate();
    return p;
}

long double g_of(u64 p, unsigned rho_p) {
    if (rho_p >= p) throw std::invalid_argument("g_of: rho >= p");
    return static_cast<long double>(rho_p) / (static_cast<long double>(p) - rho_p);
}

long double V_of(const SieveProblem& problem, u64 z) {
    long double v = 1.0L;
    for (const auto& [p, cls] : problem.classes) {
        if (p >= z) break;  // map is ordered
        v *= 1.0L - static_cast<long double>(cls.size()) / p;
    }
    return v;
}

namespace {

struct GwEnum {
    std::vector<std::pair<u64, long double>> pg;  // (p, g(p)) for sifted p < w
    long double x = 0;
    u64 budget = 0;
    u64 nodes = 0;
    long double sum = 0;

    void dfs(size_t idx, long double d, long double gval) {
        if (++nodes > budget)
            throw std::runtime_error("G_w_of: enumeration budget exceeded after " +
                                     std::to_string(nodes - 1) + " nodes");
        sum += gval;
        for (size_t j = idx; j < pg.size(); ++j) {
            const long double nd = d * pg[j].first;
            if (nd > x) break;  // pg ascending, later primes only grow d
            dfs(j + 1, nd, gval * pg[j].second);
        }
    }
};

}  // namespace

long double G_w_of(const SieveProblem& problem, u64 w, long double x, u64 node_budget) {
    GwEnum e;
    for (const auto& [p, cls] : problem.classes) {
        if (p >= w) break;
        if (!cls.empty()) e.pg.emplace_back(p, g_of(p, static_cast<unsigned>(cls.size())));
    }
    e.x = x;
    e.budget = node_budget;
    if (x < 1) return 0;  // not even d = 1
    e.dfs(0, 1.0L, 1.0L);
    return e.sum;
}

long double E_bound(const SieveProblem& problem, long double D, u64 w) {
    if (!problem.rd_hypothesis)
        throw std::logic_error("E_bound: R_d <= rho(d) hypothesis flag not set by caller");
    long double prod = 1.0L;
    for (const auto& [p, cls] : problem.classes) {
        if (p >= w) break;
        const long double f = 1.0L + static_cast<long double>(cls.size()) / p;
        prod *= f * f * f;
    }
    return D * prod;
}

Real psi(const Real& B, const Real& v) {
    if (B <= 0 || v <= 0) throw std::invalid_argument("psi: need B, v > 0");
    const Real val = v * log(v / B) - v + B;
    return val > 0 ? val : Real(0);
}

Real psi0(const Real& B, const Real& v) { return 1 - exp(-psi(B, v / 2)); }

PsiChain psi_chain(unsigned g, const Real& v, std::optional<Real> logX) {
    if (g != 2 && g != 4) throw std::invalid_argument("psi_chain: g must be 2 or 4");
    if (v <= 0) throw std::invalid_argument("psi_chain: need v > 0");
    const ConstantsLedger& L = ConstantsLedger::instance();

    PsiChain c;
    c.g = g;
    c.kappa = Rational(g, 8);
    c.B = 1 + L.B2() * g;
    c.v = v;
    c.limit_mode = !logX.has_value();

    Real ratio = 0;  // v / log D
    if (!c.limit_mode) {
        c.logX = *logX;
        if (c.logX <= 1) throw std::invalid_argument("psi_chain: logX too small");
        const Real one_plus_kappa = 1 + real_from(c.kappa);
        c.logD = c.logX - 4 * one_plus_kappa * log(c.logX);
        if (c.logD <= 0) throw std::invalid_argument("psi_chain: log D not positive");
        ratio = v / c.logD;
    }

    const Real b5 = real_from(L.B5());
    const Real expo = 1 + Real(g) / 8;
    c.psi1 = pow(b5, static_cast<int>(g)) * exp(L.B3() * g - L.gamma()) *
             (1 + ratio * ratio / 2);
    c.psi2 = pow(2 * v, expo) * c.psi1;
    c.psi4 = exp(3 * (L.K_const() + L.B4() * g)) * pow(v, -3 * expo) *
             pow(1 + ratio * ratio, 3);
    c.psi0_v = psi0(c.B, v);
    if (c.psi0_v <= 0) throw std::domain_error("psi_chain: psi0(v) = 0, chain undefined");
    c.psi5 = c.psi2 / c.psi0_v + c.psi4;
    return c;
}

std::vector<CheckReport> lemma45_audit(unsigned g, const Real& logX) {
    const ConstantsLedger& L = ConstantsLedger::instance();
    const auto cc = L.case_g(g);
    std::vector<CheckReport> out;

    const Real one_plus_kappa = 1 + real_from(cc.kappa);
    const Real logD = logX - 4 * one_plus_kappa * log(logX);
    const Real expo = 1 + Real(g) / 8;

    // sqrt(D) <= 1e-6 X (log X)^{-(1+g/8)}, all in log domain
    {
        const Real lhs = logD / 2;
        const Real rhs = -6 * log(Real(10)) + logX - expo * log(logX);
        CheckReport r = check_le("lemma45-sqrtD", lhs, rhs);
        r.param("g", std::to_string(g));
        r.param("logX", decimal_string(logX));
        r.note("log sqrt(D) vs log(1e-6 X (log X)^-(1+g/8))");
        out.push_back(std::move(r));
    }
    // z = D^{1/v}: log z > R
    {
        const Real logz = logD / cc.v;
        CheckReport r = check_ge("lemma45-z-above-eR", logz, L.R());
        r.param("g", std::to_string(g));
        r.param("logX", decimal_string(logX));
        r.note("log z = log D / v must exceed R");
        out.push_back(std::move(r));
    }
    return out;
}

long double sieve_upper_bound(const SieveProblem& problem) {
    problem.validate();
    if (problem.D <= 0) throw std::invalid_argument("sieve_upper_bound: need D > 0");
    const long double sqrtD = sqrtl(problem.D);
    const long double G = G_w_of(problem, problem.w, sqrtD);
    return static_cast<long double>(problem.X) / G + E_bound(problem, problem.D, problem.w);
}

u64 sieve_exact_count(const SieveProblem& problem, u64 cap) {
    problem.validate();
    if (problem.X > cap)
        throw std::invalid_argument("sieve_exact_count: X exceeds brute-force cap");
    std::vector<std::pair<u64, std::vector<char>>> masks;
    for (const auto& [p, cls] : problem.classes) {
        if (p >= problem.z || cls.empty()) continue;
        std::vector<char> m(p, 0);
        for (u64 r : cls) m[r] = 1;
        masks.emplace_back(p, std::move(m));
    }
    u64 count = 0;
    for (u64 a = 1; a <= problem.X; ++a) {
        bool excluded = false;
        for (const auto& [p, m] : masks) {
            if (m[a % p]) {
                excluded = true;
                break;
            }
        }
        count += !excluded;
    }
    return count;
}

std::vector<u64> order_p_residues(u64 r, u64 p) {
    if (!is_prime_u64(r) || !is_prime_u64(p))
        throw std::invalid_argument("order_p_residues: r and p must be prime");
    if (r % p != 1) throw std::invalid_argument("order_p_residues: need r ≡ 1 (mod p)");

    auto mulmod = [r](u64 a, u64 b) {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % r);
    };
    auto powmod = [&](u64 base, u64 e) {
        u64 acc = 1 % r;
        base %= r;
        while (e) {
            if (e & 1) acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return acc;
    };

    const u64 e = (r - 1) / p;
    u64 x = 1;
    for (u64 a = 2; a < r; ++a) {
        x = powmod(a, e);
        if (x != 1) break;
    }
    // x has order exactly p (p prime), so its non-identity powers are the
    // whole order-p subgroup minus 1
    std::vector<u64> out;
    u64 cur = x;
    for (u64 k = 1; k < p; ++k) {
        out.push_back(cur);
        cur = mulmod(cur, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mpverify
