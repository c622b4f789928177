#pragma once

#include "mpverify/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mpverify {

// One verification outcome.  pass <=> lhs <= rhs under the declared
// direction; margin is how much room was left (>= 0 iff pass).
struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string margin;
    std::vector<std::string> notes;

    CheckReport& param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    CheckReport& note(std::string n) {
        notes.push_back(std::move(n));
        return *this;
    }

    std::string json_line() const;
    std::string csv_line() const;
    static std::string csv_header();
};

// lhs <= rhs checks
CheckReport check_le(const std::string& id, const Real& lhs, const Real& rhs);
CheckReport check_le(const std::string& id, long double lhs, long double rhs);
CheckReport check_le(const std::string& id, const Rational& lhs, const Rational& rhs);

// value >= bound checks, reported with direction "ge"
CheckReport check_ge(const std::string& id, const Real& value, const Real& bound);
CheckReport check_ge(const std::string& id, const Rational& value, const Rational& bound);

// |value - target| <= tol * |target|
CheckReport check_close(const std::string& id, const Real& value, const Real& target,
                        const Real& rel_tol);
CheckReport check_close(const std::string& id, long double value, long double target,
                        long double rel_tol);

// pure value report (pass = true, lhs = rhs = value)
CheckReport value_report(const std::string& id, const std::string& value);

}  // namespace mpverify
