#include "mpverify/cli.hpp"

#include "mpverify/assembly.hpp"
#include "mpverify/constants.hpp"
#include "mpverify/delta.hpp"
#include "mpverify/explicit_bounds.hpp"
#include "mpverify/factorization.hpp"
#include "mpverify/multiperfect.hpp"
#include "mpverify/prime_sums.hpp"
#include "mpverify/selberg.hpp"
#include "mpverify/structure.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace mpverify::cli {

unsigned long long parse_natural(const std::string& text) {
    if (text.empty()) throw CLI::ConversionError("empty number");
    std::string t = text;
    unsigned long long mult = 1;
    switch (t.back()) {
        case 'k': case 'K': mult = 1000ull; t.pop_back(); break;
        case 'M': mult = 1000'000ull; t.pop_back(); break;
        case 'G': mult = 1000'000'000ull; t.pop_back(); break;
        default: break;
    }
    if (t.find('e') != std::string::npos || t.find('E') != std::string::npos) {
        const auto epos = t.find_first_of("eE");
        const unsigned long long mant = std::stoull(t.substr(0, epos));
        const unsigned exp10 = static_cast<unsigned>(std::stoul(t.substr(epos + 1)));
        unsigned long long v = mant;
        for (unsigned i = 0; i < exp10; ++i) v *= 10ull;
        return v * mult;
    }
    return std::stoull(t) * mult;
}

namespace {

using namespace mpverify;

struct Emitter {
    std::ostream& out;
    bool csv = false;
    bool header_done = false;
    bool all_pass = true;

    void emit(const CheckReport& r) {
        if (csv) {
            if (!header_done) {
                out << CheckReport::csv_header() << "\n";
                header_done = true;
            }
            out << r.csv_line() << "\n";
        } else {
            out << r.json_line() << "\n";
        }
        all_pass &= r.pass;
    }
    void emit(const std::vector<CheckReport>& rs) {
        for (const auto& r : rs) emit(r);
    }
};

u64 env_threads() {
    if (const char* v = std::getenv("MPVERIFY_THREADS")) {
        const unsigned long n = std::strtoul(v, nullptr, 10);
        if (n > 0) return n;
    }
    return 0;
}

std::vector<u64> parse_u64_list(const std::string& text) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_natural(tok));
    return out;
}

// accepts "964.59", "14R", "2.5R"
Real parse_log_value(const std::string& text) {
    if (!text.empty() && (text.back() == 'R' || text.back() == 'r')) {
        const std::string head = text.substr(0, text.size() - 1);
        const Real mult = head.empty() ? Real(1) : Real(head);
        return mult * ConstantsLedger::instance().R();
    }
    return Real(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification workbench for multiperfect-number sieve bounds"};
    app.require_subcommand(1);

    bool csv = false;
    unsigned threads = 0;
    unsigned precision = 128;
    app.add_flag("--csv", csv, "CSV output instead of JSON lines");
    app.add_option("--threads", threads, "worker threads (default: MPVERIFY_THREADS or all)");
    app.add_option("--precision", precision, "working precision in bits (default 128)");

    Emitter em{out};
    std::function<void()> action;
    SumsOptions sums_opts;

    // sigma
    auto* c_sigma = app.add_subcommand("sigma", "divisor sum and abundancy of N");
    std::string sigma_n, sigma_factors;
    c_sigma->add_option("--n", sigma_n, "integer to factor (trial division)");
    c_sigma->add_option("--factors", sigma_factors, "explicit factorization, e.g. 2^5,3,7");
    c_sigma->callback([&] {
        action = [&] {
            Factorization f;
            if (!sigma_factors.empty())
                f = Factorization::parse(sigma_factors);
            else if (!sigma_n.empty())
                f = Factorization::of_u64(parse_natural(sigma_n));
            else
                throw std::invalid_argument("sigma: need --n or --factors");
            CheckReport r = value_report("sigma", sigma(f).str());
            r.param("n", f.value().str());
            r.param("factors", f.str());
            r.param("abundancy", rational_string(abundancy(f)));
            em.emit(r);
        };
    });

    // search
    auto* c_search = app.add_subcommand("search", "multiperfect numbers up to a limit");
    std::string search_limit = "100000", search_target = "2/1";
    u64 search_cap = 100'000'000ull;
    c_search->add_option("--limit", search_limit, "search bound");
    c_search->add_option("--target", search_target, "abundancy target n/d");
    c_search->add_option("--cap", search_cap, "refusal cap for the limit");
    c_search->callback([&] {
        action = [&] {
            SearchOptions so;
            so.threads = threads;
            so.cap = search_cap;
            const auto hits =
                search_multiperfect(parse_natural(search_limit), parse_rational(search_target), so);
            std::string list = "[";
            for (size_t i = 0; i < hits.size(); ++i)
                list += (i ? "," : "") + std::to_string(hits[i]);
            list += "]";
            CheckReport r = value_report("search", list);
            r.param("limit", search_limit);
            r.param("target", search_target);
            r.param("count", std::to_string(hits.size()));
            em.emit(r);
        };
    });

    // classify
    auto* c_classify = app.add_subcommand("classify", "structure report for a candidate");
    std::string cl_factors, cl_spart, cl_exponents = "1,2", cl_target = "2/1", cl_delta;
    unsigned cl_s = 1;
    c_classify->add_option("--factors", cl_factors, "factorization of N")->required();
    c_classify->add_option("--s-part", cl_spart, "comma list of s-part primes");
    c_classify->add_option("--exponents", cl_exponents, "the set S of admissible beta");
    c_classify->add_option("--s", cl_s, "number of unconstrained prime powers");
    c_classify->add_option("--target", cl_target, "abundancy target n/d");
    c_classify->add_option("--delta", cl_delta, "also check the margin at this delta");
    c_classify->callback([&] {
        action = [&] {
            ShapeSpec spec;
            spec.s = cl_s;
            for (u64 b : parse_u64_list(cl_exponents)) spec.exponent_set.insert(
                static_cast<unsigned>(b));
            spec.target = parse_rational(cl_target);
            std::set<Integer> sp;
            if (!cl_spart.empty())
                for (u64 p : parse_u64_list(cl_spart)) sp.insert(Integer(p));
            const StructureReport rep = classify(Factorization::parse(cl_factors), spec, sp);

            CheckReport r = value_report("classify", rational_string(rep.s_part_abundancy));
            std::string pset = "[";
            for (size_t i = 0; i < rep.P_set.size(); ++i)
                pset += (i ? "," : "") + rep.P_set[i].str();
            r.param("P", pset + "]");
            r.param("P_product", rep.P_product.str());
            for (const auto& [beta, qs] : rep.Q_beta) {
                std::string l = "[";
                for (size_t i = 0; i < qs.size(); ++i) l += (i ? "," : "") + qs[i].str();
                r.param("Q_" + std::to_string(beta), l + "]");
            }
            for (const auto& [beta, d] : rep.d_beta)
                r.param("d_" + std::to_string(beta), rational_string(d));
            std::string t = "[";
            for (size_t i = 0; i < rep.T_indices.size(); ++i)
                t += (i ? "," : "") + std::to_string(rep.T_indices[i]);
            r.param("T", t + "]");
            r.param("omega_P", std::to_string(rep.omega_P));
            r.param("omega", std::to_string(rep.omega));
            r.param("s_part_abundancy", rational_string(rep.s_part_abundancy));
            for (const auto& n : rep.notes) r.note(n);
            em.emit(r);
            if (!cl_delta.empty()) em.emit(eq13_margin(rep, parse_rational(cl_delta)));
        };
    });

    // delta
    auto* c_delta = app.add_subcommand("delta", "effective abundancy-gap lower bounds");
    unsigned d_s = 1;
    u64 d_n = 2, d_d = 1;
    std::string d_primes = "3", d_pscap_delta;
    c_delta->add_option("--s", d_s, "number of small prime powers");
    c_delta->add_option("--n", d_n, "target numerator");
    c_delta->add_option("--d", d_d, "target denominator");
    c_delta->add_option("--primes", d_primes, "the s primes, ascending");
    c_delta->add_option("--ps-cap-delta", d_pscap_delta, "emit the p_s cap at this delta'");
    c_delta->callback([&] {
        action = [&] {
            DeltaQuery q;
            q.s = d_s;
            q.n = d_n;
            q.d = d_d;
            q.primes = parse_u64_list(d_primes);

            CheckReport base = value_report("delta-base", rational_string(delta_base(d_n)));
            base.param("n", std::to_string(d_n));
            em.emit(base);

            const auto xs = pomerance_xi(q.s, q.n, q.primes);
            std::string xl = "[";
            for (size_t i = 0; i < xs.size(); ++i) xl += (i ? "," : "") + std::to_string(xs[i]);
            CheckReport xr = value_report("pomerance-xi", xl + "]");
            xr.param("primes", d_primes);
            em.emit(xr);

            const DeltaResult dr = delta_recursive(q);
            CheckReport rec = value_report("delta-recursive", rational_string(dr.value));
            rec.param("s", std::to_string(q.s));
            rec.param("primes", d_primes);
            rec.param("branch", dr.branch);
            em.emit(rec);

            if (!d_pscap_delta.empty()) {
                CheckReport cap = value_report(
                    "ps-cap", ps_cap(d_n, d_d, parse_rational(d_pscap_delta)).str());
                cap.param("delta_prev", d_pscap_delta);
                em.emit(cap);
            }
        };
    });

    // theta
    auto* c_theta = app.add_subcommand("theta", "Chebyshev theta over a progression");
    std::string t_x = "1000";
    u64 t_mod = 1, t_res = 0;
    std::string t_checkpoint;
    c_theta->add_option("--x", t_x, "upper limit");
    c_theta->add_option("--mod", t_mod, "modulus (1 = all primes)");
    c_theta->add_option("--res", t_res, "residue");
    c_theta->add_option("--checkpoint", t_checkpoint, "CSV checkpoint path (resumable)");
    c_theta->callback([&] {
        action = [&] {
            sums_opts.checkpoint_path = t_checkpoint;
            const u64 x = parse_natural(t_x);
            const long double v = theta(x, APQuery{t_mod, t_res}, sums_opts);
            CheckReport r = value_report("theta", decimal_string(v));
            r.param("x", std::to_string(x));
            r.param("mod", std::to_string(t_mod));
            r.param("res", std::to_string(t_res));
            em.emit(r);
        };
    });

    // sums
    auto* c_sums = app.add_subcommand("sums", "prime sums, Mertens products, phi1/phi2");
    std::string s_z = "1000";
    u64 s_mod = 1, s_res = 0;
    bool s_identities = false;
    c_sums->add_option("--z", s_z, "upper limit");
    c_sums->add_option("--mod", s_mod, "modulus (1 = all primes)");
    c_sums->add_option("--res", s_res, "residue");
    c_sums->add_flag("--identities", s_identities,
                     "check the partial-summation identities (mod 15, res 1)");
    c_sums->callback([&] {
        action = [&] {
            const u64 z = parse_natural(s_z);
            const APQuery q{s_mod, s_res};
            const APSums s = ap_sums(z, q, sums_opts);
            CheckReport r = value_report("sums", decimal_string(s.theta));
            r.param("z", std::to_string(z));
            r.param("mod", std::to_string(s_mod));
            r.param("res", std::to_string(s_res));
            r.param("theta", decimal_string(s.theta));
            r.param("sum_recip", decimal_string(s.recip));
            r.param("sum_logp_over_p", decimal_string(s.logp_over_p));
            r.param("pi", std::to_string(s.pi));
            if (s_mod == 1) {
                const auto [pm, pp] = mertens_products(std::max<u64>(z, 3), sums_opts);
                r.param("mertens_minus", decimal_string(pm));
                r.param("mertens_plus", decimal_string(pp));
            }
            em.emit(r);

            if (s_identities) {
                if (s_mod != 15 || s_res != 1)
                    throw std::invalid_argument("--identities needs --mod 15 --res 1");
                if (z <= 61)
                    throw std::invalid_argument("--identities needs z > 61");
                const long double lz = logl(static_cast<long double>(z));
                const long double th60 = logl(31.0L);
                const long double lhs1 = s.recip;
                const long double rhs1 = s.theta / (z * lz) - th60 / (60 * logl(60.0L)) +
                                         1.0L / 31 + phi1(static_cast<long double>(z), sums_opts);
                CheckReport i1 = check_close("partial-summation-recip", lhs1, rhs1, 1e-9L);
                i1.param("z", std::to_string(z));
                em.emit(i1);
                const long double rhs2 =
                    s.theta / z + phi2(static_cast<long double>(z), sums_opts);
                CheckReport i2 =
                    check_close("partial-summation-logp", s.logp_over_p, rhs2, 1e-9L);
                i2.param("z", std::to_string(z));
                em.emit(i2);
            }
        };
    });

    // rs-check
    auto* c_rs = app.add_subcommand("rs-check", "classical prime-sum/product inequalities");
    std::string rs_z = "300";
    c_rs->add_option("--z", rs_z, "evaluation point");
    c_rs->callback([&] {
        action = [&] { em.emit(check_rs(parse_natural(rs_z), sums_opts)); };
    });

    // theta-bound
    auto* c_tb = app.add_subcommand("theta-bound", "theta(x,15,1) error-term audit");
    std::string tb_x = "1000";
    std::string tb_regime;
    c_tb->add_option("--x", tb_x, "evaluation point");
    c_tb->add_option("--regime", tb_regime, "force a band: small|table2|rr|dusart")
        ->check(CLI::IsMember({"small", "table2", "rr", "dusart", ""}));
    c_tb->callback([&] {
        action = [&] {
            const u64 x = parse_natural(tb_x);
            CheckReport r = check_theta_bound(x, sums_opts);
            if (!tb_regime.empty()) {
                // override: compare against the chosen band instead
                const long double th = theta(x, APQuery{15, 1}, sums_opts);
                const long double lhs = std::fabs(th - static_cast<long double>(x) / 8);
                const ConstantsLedger& L = ConstantsLedger::instance();
                long double rhs = 0;
                if (tb_regime == "small") rhs = static_cast<long double>(x) / 8;
                else if (tb_regime == "table2")
                    rhs = L.rr_sqrt().convert_to<long double>() *
                          sqrtl(static_cast<long double>(x));
                else if (tb_regime == "rr")
                    rhs = L.theta_large().convert_to<long double>() * x;
                else
                    rhs = L.dusart().convert_to<long double>() * x /
                          logl(static_cast<long double>(x));
                r = check_le("theta-bound", lhs, rhs);
                r.param("x", std::to_string(x));
                r.param("regime", tb_regime);
                r.note("regime forced by --regime");
            }
            em.emit(r);
        };
    });

    // derive-constants
    auto* c_dc = app.add_subcommand("derive-constants", "replay the B2/B3/B4 chains");
    c_dc->callback([&] {
        action = [&] {
            const B34Result b34 = derive_B3_B4();
            em.emit(b34.steps);
            CheckReport s1 = value_report("b34-summary", decimal_string(b34.upper_constant));
            s1.param("upper_constant", decimal_string(b34.upper_constant));
            s1.param("lower_constant", decimal_string(b34.lower_constant));
            s1.param("phi1_eR_bound", decimal_string(b34.phi1_eR_bound));
            s1.pass = b34.pass;
            em.emit(s1);
            const B2Result b2 = derive_B2();
            em.emit(b2.steps);
            CheckReport s2 = value_report("b2-summary", decimal_string(b2.slope));
            s2.param("chain_constant", decimal_string(b2.chain_constant));
            s2.pass = b2.pass;
            em.emit(s2);
        };
    });

    // sieve
    auto* c_sieve = app.add_subcommand("sieve", "bound/count a sifting instance");
    std::string sv_problem;
    bool sv_exact = false, sv_bound = false;
    c_sieve->add_option("--problem", sv_problem, "JSON problem description")->required();
    c_sieve->add_flag("--exact", sv_exact, "exact count only");
    c_sieve->add_flag("--bound", sv_bound, "upper bound only");
    c_sieve->callback([&] {
        action = [&] {
            std::ifstream in(sv_problem);
            if (!in) throw std::runtime_error("cannot open " + sv_problem);
            std::stringstream buf;
            buf << in.rdbuf();
            const SieveProblem prob = SieveProblem::from_json(buf.str());
            const bool both = sv_exact == sv_bound;  // neither or both flags
            std::optional<u64> exact;
            std::optional<long double> bound;
            if (sv_exact || both) exact = sieve_exact_count(prob);
            if (sv_bound || both) bound = sieve_upper_bound(prob);
            if (exact) {
                CheckReport r = value_report("sieve-exact", std::to_string(*exact));
                r.param("X", std::to_string(prob.X));
                r.param("z", std::to_string(prob.z));
                em.emit(r);
            }
            if (bound) {
                CheckReport r = value_report("sieve-bound", decimal_string(*bound));
                r.param("X", std::to_string(prob.X));
                r.param("w", std::to_string(prob.w));
                r.param("D", decimal_string(prob.D));
                em.emit(r);
            }
            if (exact && bound) {
                CheckReport r = check_le("sieve-soundness", static_cast<long double>(*exact),
                                         *bound);
                em.emit(r);
            }
        };
    });

    // psi-chain
    auto* c_psi = app.add_subcommand("psi-chain", "the psi1..psi5 chain for one case");
    unsigned p_g = 2;
    std::string p_v, p_logx;
    bool p_limit = false;
    c_psi->add_option("--g", p_g, "case: 2 or 4")->check(CLI::IsMember({2u, 4u}));
    c_psi->add_option("--v", p_v, "v parameter (default: ledger value for g)");
    c_psi->add_flag("--limit-mode", p_limit, "drop the (v/log D)^2 terms");
    c_psi->add_option("--logx", p_logx, "finite log X (accepts multiples of R, e.g. 14R)");
    c_psi->callback([&] {
        action = [&] {
            const ConstantsLedger& L = ConstantsLedger::instance();
            const Real v = p_v.empty() ? L.case_g(p_g).v : Real(p_v);
            std::optional<Real> logx;
            if (!p_limit) {
                if (p_logx.empty())
                    throw std::invalid_argument("psi-chain: give --logx or --limit-mode");
                logx = parse_log_value(p_logx);
            }
            const PsiChain c = psi_chain(p_g, v, logx);
            CheckReport r = value_report("psi-chain", decimal_string(c.psi5));
            r.param("g", std::to_string(p_g));
            r.param("v", decimal_string(c.v));
            r.param("kappa", rational_string(c.kappa));
            r.param("B", decimal_string(c.B));
            r.param("mode", c.limit_mode ? "limit" : "finite");
            if (!c.limit_mode) {
                r.param("logX", decimal_string(c.logX));
                r.param("logD", decimal_string(c.logD));
            }
            r.param("psi1", decimal_string(c.psi1));
            r.param("psi2", decimal_string(c.psi2));
            r.param("psi4", decimal_string(c.psi4));
            r.param("psi0", decimal_string(c.psi0_v));
            r.param("psi5", decimal_string(c.psi5));
            em.emit(r);
            if (logx) em.emit(lemma45_audit(p_g, *logx));
        };
    });

    // final-bound
    auto* c_final = app.add_subcommand("final-bound", "end-to-end bound reproduction");
    bool f_statement = false;
    c_final->add_flag("--statement-constants", f_statement,
                      "use the statement-side (alpha, c) variants");
    c_final->callback([&] {
        action = [&] {
            const FinalBoundReport rep = theorem2_pipeline(f_statement);
            em.emit(rep.checks);
            CheckReport summary = value_report("final-bound", decimal_string(rep.final_exponent));
            summary.param("threshold", decimal_string(rep.threshold));
            for (const auto& [g, e] : rep.case_exponents)
                summary.param("exponent_g" + std::to_string(g), decimal_string(e));
            summary.pass = rep.pass;
            em.emit(summary);
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mpverify");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    em.csv = csv;
    if (threads == 0) threads = static_cast<unsigned>(env_threads());
    sums_opts.threads = threads;
    set_real_precision_bits(precision);

    try {
        action();
    } catch (const std::exception& e) {
        CheckReport r;
        r.check_id = "error";
        r.pass = false;
        r.note(e.what());
        em.emit(r);
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return em.all_pass ? 0 : 1;
}

}  // namespace mpverify::cli
