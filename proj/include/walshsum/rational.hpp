#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace walshsum {

// Exact arbitrary-precision rational. All library arithmetic in exact mode
// goes through this type; results are always canonical (lowest terms).
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; these helpers do.
Rational rat(long num, long den = 1);
Rational rat_u64(std::uint64_t num, std::uint64_t den = 1);

bool is_integer(const Rational& r);

// base^e with e >= 0.
Rational rat_pow(const Rational& base, unsigned long e);

// 2^e for any integer e.
Rational pow2(int e);

double rat_to_double(const Rational& r);

// Canonical text form: "p/q" in lowest terms, "p" when q == 1.
std::string rat_str(const Rational& r);

// Parses "p", "p/q", or a plain integer string. Throws std::invalid_argument.
Rational rat_parse(const std::string& text);

// Shared formatting for binary64 outputs: shortest round-trip-safe form
// with 17 significant digits.
std::string double_str(double v);

}  // namespace walshsum
