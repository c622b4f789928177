#include "mpverify/report.hpp"

#include <json.hpp>

#include <sstream>

namespace mpverify {

using nlohmann::json;

std::string CheckReport::json_line() const {
    json j;
    j["check_id"] = check_id;
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["pass"] = pass;
    j["margin"] = margin;
    j["notes"] = notes;
    return j.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string CheckReport::csv_header() { return "check_id,pass,lhs,rhs,margin,params,notes"; }

std::string CheckReport::csv_line() const {
    std::ostringstream p;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) p << ';';
        first = false;
        p << k << '=' << v;
    }
    std::ostringstream n;
    first = true;
    for (const auto& s : notes) {
        if (!first) n << ';';
        first = false;
        n << s;
    }
    std::ostringstream line;
    line << csv_escape(check_id) << ',' << (pass ? "true" : "false") << ',' << csv_escape(lhs)
         << ',' << csv_escape(rhs) << ',' << csv_escape(margin) << ',' << csv_escape(p.str())
         << ',' << csv_escape(n.str());
    return line.str();
}

CheckReport check_le(const std::string& id, const Real& lhs, const Real& rhs) {
    CheckReport r;
    r.check_id = id;
    r.lhs = decimal_string(lhs);
    r.rhs = decimal_string(rhs);
    r.pass = lhs <= rhs;
    r.margin = decimal_string(Real(rhs - lhs));
    r.param("direction", "le");
    return r;
}

CheckReport check_le(const std::string& id, long double lhs, long double rhs) {
    CheckReport r;
    r.check_id = id;
    r.lhs = decimal_string(lhs);
    r.rhs = decimal_string(rhs);
    r.pass = lhs <= rhs;
    r.margin = decimal_string(rhs - lhs);
    r.param("direction", "le");
    return r;
}

CheckReport check_le(const std::string& id, const Rational& lhs, const Rational& rhs) {
    CheckReport r;
    r.check_id = id;
    r.lhs = rational_string(lhs);
    r.rhs = rational_string(rhs);
    r.pass = lhs <= rhs;
    r.margin = rational_string(Rational(rhs - lhs));
    r.param("direction", "le");
    return r;
}

CheckReport check_ge(const std::string& id, const Real& value, const Real& bound) {
    CheckReport r;
    r.check_id = id;
    r.lhs = decimal_string(value);
    r.rhs = decimal_string(bound);
    r.pass = value >= bound;
    r.margin = decimal_string(Real(value - bound));
    r.param("direction", "ge");
    return r;
}

CheckReport check_ge(const std::string& id, const Rational& value, const Rational& bound) {
    CheckReport r;
    r.check_id = id;
    r.lhs = rational_string(value);
    r.rhs = rational_string(bound);
    r.pass = value >= bound;
    r.margin = rational_string(Rational(value - bound));
    r.param("direction", "ge");
    return r;
}

CheckReport check_close(const std::string& id, const Real& value, const Real& target,
                        const Real& rel_tol) {
    CheckReport r;
    r.check_id = id;
    r.lhs = decimal_string(value);
    r.rhs = decimal_string(target);
    const Real err = abs(value - target);
    const Real tol = rel_tol * abs(target);
    r.pass = err <= tol;
    r.margin = decimal_string(Real(tol - err));
    r.param("direction", "close");
    r.param("rel_tol", decimal_string(rel_tol));
    return r;
}

CheckReport check_close(const std::string& id, long double value, long double target,
                        long double rel_tol) {
    CheckReport r;
    r.check_id = id;
    r.lhs = decimal_string(value);
    r.rhs = decimal_string(target);
    const long double err = std::fabs(value - target);
    const long double tol = rel_tol * std::fabs(target);
    r.pass = err <= tol;
    r.margin = decimal_string(tol - err);
    r.param("direction", "close");
    r.param("rel_tol", decimal_string(rel_tol));
    return r;
}

CheckReport value_report(const std::string& id, const std::string& value) {
    CheckReport r;
    r.check_id = id;
    r.lhs = value;
    r.rhs = value;
    r.pass = true;
    r.margin = "0";
    r.param("direction", "value");
    return r;
}

}  // namespace mpverify
