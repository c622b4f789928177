#include "mpverify/assembly.hpp"
#include "mpverify/cli.hpp"
#include "mpverify/constants.hpp"
#include "mpverify/delta.hpp"
#include "mpverify/explicit_bounds.hpp"
#include "mpverify/factorization.hpp"
#include "mpverify/multiperfect.hpp"
#include "mpverify/prime_sums.hpp"
#include "mpverify/selberg.hpp"
#include "mpverify/structure.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mpverify;

namespace {

py::int_ to_pyint(const Integer& z) { return py::int_(py::str(z.str())); }

py::object to_fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(numerator(q).str() + "/" + denominator(q).str());
}

Rational rational_from_py(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj)) return Rational(Integer(py::str(obj).cast<std::string>()));
    // fractions.Fraction or anything with numerator/denominator
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        const Integer n(py::str(obj.attr("numerator")).cast<std::string>());
        const Integer d(py::str(obj.attr("denominator")).cast<std::string>());
        return Rational(n, d);
    }
    throw py::type_error("expected str 'n/d', int, or Fraction");
}

Factorization factorization_from_py(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return Factorization::parse(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj)) return Factorization::of_u64(obj.cast<u64>());
    std::vector<PrimePower> pairs;
    for (const auto& item : obj) {
        auto t = item.cast<py::tuple>();
        pairs.push_back({Integer(py::str(t[0]).cast<std::string>()), t[1].cast<unsigned>()});
    }
    return Factorization::from_pairs(std::move(pairs));
}

py::dict report_to_dict(const CheckReport& r) {
    py::dict d;
    d["check_id"] = r.check_id;
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    d["params"] = params;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["pass"] = r.pass;
    d["margin"] = r.margin;
    d["notes"] = r.notes;
    return d;
}

py::list reports_to_list(const std::vector<CheckReport>& rs) {
    py::list out;
    for (const auto& r : rs) out.append(report_to_dict(r));
    return out;
}

SieveProblem problem_from_dict(const py::dict& d) {
    SieveProblem p;
    p.X = d["X"].cast<u64>();
    p.z = d["z"].cast<u64>();
    p.w = d["w"].cast<u64>();
    p.D = d.contains("D") ? d["D"].cast<double>() : 0.0;
    if (d.contains("classes"))
        for (const auto& [key, val] : d["classes"].cast<py::dict>())
            p.classes[key.cast<u64>()] = val.cast<std::vector<u64>>();
    if (d.contains("rd_hypothesis")) p.rd_hypothesis = d["rd_hypothesis"].cast<bool>();
    p.validate();
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic and explicit-constant checks for multiperfect-number "
              "sieve bounds";
    m.attr("__version__") = "0.1.0";

    m.def("set_precision_bits", &set_real_precision_bits, py::arg("bits"),
          "working precision for the constant chains (default 128)");

    // exact arithmetic
    m.def(
        "sigma", [](const py::object& n) { return to_pyint(sigma(factorization_from_py(n))); },
        py::arg("n"), "divisor sum; accepts int, 'p^e,...' string, or [(p, e), ...]");
    m.def(
        "abundancy",
        [](const py::object& n) { return to_fraction(abundancy(factorization_from_py(n))); },
        py::arg("n"), "sigma(n)/n as a Fraction");
    m.def(
        "factor", [](u64 n) {
            py::list out;
            for (const auto& pp : Factorization::of_u64(n).pairs())
                out.append(py::make_tuple(to_pyint(pp.prime), pp.exponent));
            return out;
        },
        py::arg("n"));
    m.def(
        "search_multiperfect",
        [](u64 limit, const py::object& target, unsigned threads) {
            SearchOptions opts;
            opts.threads = threads;
            return search_multiperfect(limit, rational_from_py(target), opts);
        },
        py::arg("limit"), py::arg("target") = "2/1", py::arg("threads") = 0);

    // structure
    m.def(
        "prime_set_P",
        [](const std::set<unsigned>& S) {
            py::list out;
            for (const auto& p : prime_set_P(S)) out.append(to_pyint(p));
            return out;
        },
        py::arg("exponents"));
    m.def(
        "euler_form_check",
        [](const py::object& n) {
            const auto r = euler_form_check(factorization_from_py(n));
            return py::make_tuple(r.ok, r.diagnosis);
        },
        py::arg("n"));
    m.def(
        "classify",
        [](const py::object& n, unsigned s, const std::set<unsigned>& exponents,
           const py::object& target, const std::vector<u64>& s_part) {
            ShapeSpec spec;
            spec.s = s;
            spec.exponent_set = exponents;
            spec.target = rational_from_py(target);
            std::set<Integer> marks;
            for (u64 p : s_part) marks.insert(Integer(p));
            const auto rep = classify(factorization_from_py(n), spec, marks);
            py::dict d;
            py::list pset;
            for (const auto& p : rep.P_set) pset.append(to_pyint(p));
            d["P"] = pset;
            d["P_product"] = to_pyint(rep.P_product);
            py::dict qb, db;
            for (const auto& [beta, qs] : rep.Q_beta) {
                py::list l;
                for (const auto& q : qs) l.append(to_pyint(q));
                qb[py::int_(beta)] = l;
            }
            for (const auto& [beta, v] : rep.d_beta) db[py::int_(beta)] = to_fraction(v);
            d["Q_beta"] = qb;
            d["d_beta"] = db;
            d["T_indices"] = rep.T_indices;
            d["omega_P"] = rep.omega_P;
            d["omega"] = rep.omega;
            d["s_part_abundancy"] = to_fraction(rep.s_part_abundancy);
            d["notes"] = rep.notes;
            return d;
        },
        py::arg("n"), py::arg("s"), py::arg("exponents"), py::arg("target") = "2/1",
        py::arg("s_part") = std::vector<u64>{});

    // delta
    m.def(
        "delta_base", [](u64 n) { return to_fraction(delta_base(n)); }, py::arg("n"));
    m.def("pomerance_xi", &pomerance_xi, py::arg("s"), py::arg("n"), py::arg("primes"));
    m.def(
        "delta_recursive",
        [](unsigned s, u64 n, u64 d, const std::vector<u64>& primes) {
            const auto r = delta_recursive({s, n, d, primes});
            return py::make_tuple(to_fraction(r.value), r.branch);
        },
        py::arg("s"), py::arg("n"), py::arg("d"), py::arg("primes"));
    m.def(
        "ps_cap",
        [](u64 n, u64 d, const py::object& delta_prev) {
            return to_pyint(ps_cap(n, d, rational_from_py(delta_prev)));
        },
        py::arg("n"), py::arg("d"), py::arg("delta_prev"));

    // prime sums
    m.def(
        "primes_in_range",
        [](u64 lo, u64 hi) { return primes_in_range({lo, hi}); }, py::arg("lo"), py::arg("hi"));
    m.def(
        "theta",
        [](u64 x, u64 mod, u64 res, unsigned threads, const std::string& checkpoint) {
            SumsOptions opts;
            opts.threads = threads;
            opts.checkpoint_path = checkpoint;
            return static_cast<double>(theta(x, APQuery{mod, res}, opts));
        },
        py::arg("x"), py::arg("mod") = 1, py::arg("res") = 0, py::arg("threads") = 0,
        py::arg("checkpoint") = "");
    m.def(
        "sum_recip",
        [](u64 z, u64 mod, u64 res) {
            return static_cast<double>(sum_recip(z, APQuery{mod, res}));
        },
        py::arg("z"), py::arg("mod") = 1, py::arg("res") = 0);
    m.def(
        "sum_logp_over_p",
        [](u64 z, u64 mod, u64 res) {
            return static_cast<double>(sum_logp_over_p(z, APQuery{mod, res}));
        },
        py::arg("z"), py::arg("mod") = 1, py::arg("res") = 0);
    m.def(
        "mertens_products",
        [](u64 z) {
            const auto [a, b] = mertens_products(z);
            return py::make_tuple(static_cast<double>(a), static_cast<double>(b));
        },
        py::arg("z"));
    m.def(
        "phi1", [](double z) { return static_cast<double>(phi1(z)); }, py::arg("z"));
    m.def(
        "phi2", [](double z) { return static_cast<double>(phi2(z)); }, py::arg("z"));

    // explicit checks
    m.def(
        "check_theta_bound", [](u64 x) { return report_to_dict(check_theta_bound(x)); },
        py::arg("x"));
    m.def("check_rs", [](u64 z) { return reports_to_list(check_rs(z)); }, py::arg("z"));
    m.def("derive_constants", [] {
        const auto b34 = derive_B3_B4();
        const auto b2 = derive_B2();
        py::dict d;
        d["B4_upper"] = decimal_string(b34.upper_constant);
        d["B3_lower"] = decimal_string(b34.lower_constant);
        d["B2_slope"] = decimal_string(b2.slope);
        d["pass"] = b34.pass && b2.pass;
        py::list steps;
        for (const auto& s : b34.steps) steps.append(report_to_dict(s));
        for (const auto& s : b2.steps) steps.append(report_to_dict(s));
        d["steps"] = steps;
        return d;
    });

    // selberg sieve
    m.def(
        "psi_chain",
        [](unsigned g, const py::object& v, const py::object& logx) {
            const ConstantsLedger& L = ConstantsLedger::instance();
            const Real vv = v.is_none() ? L.case_g(g).v : Real(py::str(v).cast<std::string>());
            std::optional<Real> lx;
            if (!logx.is_none()) lx = Real(py::str(logx).cast<std::string>());
            const PsiChain c = psi_chain(g, vv, lx);
            py::dict d;
            d["g"] = c.g;
            d["kappa"] = to_fraction(c.kappa);
            d["limit_mode"] = c.limit_mode;
            d["psi1"] = c.psi1.convert_to<double>();
            d["psi2"] = c.psi2.convert_to<double>();
            d["psi4"] = c.psi4.convert_to<double>();
            d["psi0"] = c.psi0_v.convert_to<double>();
            d["psi5"] = c.psi5.convert_to<double>();
            d["psi5_str"] = decimal_string(c.psi5);
            if (!c.limit_mode) d["logD"] = decimal_string(c.logD);
            return d;
        },
        py::arg("g"), py::arg("v") = py::none(), py::arg("logx") = py::none());
    m.def(
        "order_p_residues", &order_p_residues, py::arg("r"), py::arg("p"));
    m.def(
        "sieve_exact_count",
        [](const py::dict& d) { return sieve_exact_count(problem_from_dict(d)); },
        py::arg("problem"));
    m.def(
        "sieve_upper_bound",
        [](const py::dict& d) {
            return static_cast<double>(sieve_upper_bound(problem_from_dict(d)));
        },
        py::arg("problem"));

    // assembly
    m.def("split_threshold", [] {
        const auto st = split_threshold();
        py::dict d;
        d["value"] = decimal_string(st.value);
        d["correction_log"] = decimal_string(st.correction_log);
        d["correction_tail"] = decimal_string(st.correction_tail);
        d["pass"] = st.report.pass;
        return d;
    });
    m.def(
        "w_bound",
        [](double c, double alpha) {
            return w_bound(Real(decimal_string((long double)c)),
                           Real(decimal_string((long double)alpha)))
                .convert_to<double>();
        },
        py::arg("c"), py::arg("alpha"));
    m.def(
        "theorem2_pipeline",
        [](bool statement_constants) {
            const auto rep = theorem2_pipeline(statement_constants);
            py::dict d;
            d["final_exponent"] = rep.final_exponent.convert_to<double>();
            d["final_exponent_str"] = decimal_string(rep.final_exponent);
            d["threshold"] = decimal_string(rep.threshold);
            py::dict cases;
            for (const auto& [g, e] : rep.case_exponents)
                cases[py::int_(g)] = e.convert_to<double>();
            d["case_exponents"] = cases;
            d["pass"] = rep.pass;
            d["checks"] = reports_to_list(rep.checks);
            return d;
        },
        py::arg("statement_constants") = false);

    // full CLI, for driving everything from python
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
