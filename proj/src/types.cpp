#include "mpverify/types.hpp"

#include <cmath>
#include <cstdio>

namespace mpverify {

namespace {

unsigned g_precision_bits = 0;

unsigned digits10_for_bits(unsigned bits) {
    // 1 decimal digit ~ 3.3219 bits
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct PrecisionInit {
    PrecisionInit() { set_real_precision_bits(128); }
};
PrecisionInit g_precision_init;

}  // namespace

void set_real_precision_bits(unsigned bits) {
    if (bits < 64) bits = 64;
    g_precision_bits = bits;
    Real::default_precision(digits10_for_bits(bits));
}

unsigned real_precision_bits() { return g_precision_bits; }

Real real_from(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Real real_from_u64(u64 n) { return Real(Integer(n)); }

std::string decimal_string(const Real& x) {
    // str(0, ...) emits enough digits to round-trip at the current precision
    return x.str(0, std::ios_base::scientific);
}

std::string decimal_string(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", x);
    return buf;
}

std::string rational_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace mpverify
