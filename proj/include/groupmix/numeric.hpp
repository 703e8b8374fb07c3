#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace groupmix {

// Exact rational arithmetic (GMP-backed). Default mode for all verification.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Extended-precision floating point for sequences with irrational
// probabilities: 40 significant decimal digits (~133 bits of mantissa).
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

enum class Mode { exact, numeric };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "numeric"; }

/// Parses "a/b" or "a" into an exact rational. Throws on malformed input.
Rat parse_rational(const std::string& s);

/// Emits "a/b", or just "a" when the denominator is 1.
std::string rational_string(const Rat& q);

/// Parses a decimal literal into a BigFloat.
BigFloat parse_bigfloat(const std::string& s);

/// Decimal form with full working precision (40 significant digits).
std::string bigfloat_string(const BigFloat& x);

inline BigFloat to_bigfloat(const Rat& q) {
  return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

/// ceil(log2(n)) for n >= 1.
int ceil_log2(const Int& n);

/// floor(log2(n)) for n >= 1.
int floor_log2(const Int& n);

/// Number of ones in the binary expansion of n >= 0.
int hamming_weight(std::int64_t n);

bool is_power_of_two(const Int& n);

}  // namespace groupmix
