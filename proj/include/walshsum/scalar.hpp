#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "walshsum/rational.hpp"
#include "walshsum/root_value.hpp"

namespace walshsum {

// Exponent of an L_p space: a rational p >= 1 or infinity.
// p = infinity means the maximum of absolute cell values.
class LpExponent {
 public:
  explicit LpExponent(Rational p);
  static LpExponent infinity();
  // "1", "2", "7/3", "inf" (also accepts "infinity").
  static LpExponent parse(const std::string& text);

  bool is_infinity() const { return infinite_; }
  const Rational& value() const;  // finite only
  bool is_integer() const { return !infinite_ && walshsum::is_integer(p_); }
  unsigned long integer_value() const;
  std::string str() const;

  bool operator==(const LpExponent& o) const {
    return infinite_ == o.infinite_ && (infinite_ || p_ == o.p_);
  }

 private:
  LpExponent() : infinite_(true) {}
  bool infinite_;
  Rational p_ = 1;
};

// The two scalar modes of the library. Exact mode (Rational) certifies
// identities and inequalities with no rounding; float mode (double) is for
// large scans, with relative tolerance 1e-9 on comparisons.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";
  using norm_type = RootValue;

  static Rational from_rational(const Rational& r) { return r; }
  static Rational abs(const Rational& v) { return ::abs(v); }
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
  static bool le(const Rational& a, const Rational& b) { return a <= b; }
  static double to_double(const Rational& v) { return rat_to_double(v); }
  static std::string str(const Rational& v) { return rat_str(v); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
  static constexpr double rel_tol = 1e-9;
  using norm_type = double;

  static double from_rational(const Rational& r) { return rat_to_double(r); }
  static double abs(double v) { return std::fabs(v); }
  static double tol(double a, double b) {
    return rel_tol * std::max({1.0, std::fabs(a), std::fabs(b)});
  }
  static bool eq(double a, double b) { return std::fabs(a - b) <= tol(a, b); }
  static bool le(double a, double b) { return a <= b + tol(a, b); }
  static double to_double(double v) { return v; }
  static std::string str(double v) { return double_str(v); }
};

template <class S>
using norm_t = typename scalar_traits<S>::norm_type;

inline double norm_to_double(const RootValue& v) { return v.to_double(); }
inline double norm_to_double(double v) { return v; }
inline std::string norm_str(const RootValue& v) { return v.str(); }
inline std::string norm_str(double v) { return double_str(v); }

}  // namespace walshsum
