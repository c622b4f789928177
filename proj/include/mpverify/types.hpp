#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace mpverify {

using u8  = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Exact integer/rational arithmetic (GMP-backed).  Everything that feeds an
// equality test h(N) = n/d stays in these types; no floats on that path.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Variable-precision float (MPFR-backed) for the closed-form constant
// chains.  The exponent range is wide enough to hold e^(-14R) ~ 1e-5866
// without underflow, which the final-bound threshold needs.
// Sieve accumulations use long double + compensated summation instead.
using Real = boost::multiprecision::mpfr_float;

// Default 128 bits; the CLI --precision flag overrides.
void set_real_precision_bits(unsigned bits);
unsigned real_precision_bits();

Real real_from(const Rational& q);
Real real_from_u64(u64 n);

// Full-precision decimal strings (round-trip safe).
std::string decimal_string(const Real& x);
std::string decimal_string(long double x);
std::string rational_string(const Rational& q);

}  // namespace mpverify
