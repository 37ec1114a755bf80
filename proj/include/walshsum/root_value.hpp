#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walshsum/rational.hpp"

namespace walshsum {

// Exact value of the form radicand^(1/degree).
//
// L_p norms of rational step functions are p-th roots of rationals, so they
// are not rationals themselves once p > 1; this type keeps them exact.
// Invariants: degree >= 1; radicand >= 0 when degree > 1.
struct RootValue {
  Rational radicand = 0;
  unsigned degree = 1;

  RootValue() = default;
  RootValue(Rational r, unsigned d);
  static RootValue from_rational(Rational r) { return RootValue(std::move(r), 1); }

  bool is_zero() const { return radicand == 0; }
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;
  double to_double() const;
  // "p/q" for degree 1, "(p/q)^(1/d)" otherwise.
  std::string str() const;
};

// Total order on values (not representations). Exact.
int compare(const RootValue& a, const RootValue& b);
bool operator<(const RootValue& a, const RootValue& b);
bool operator==(const RootValue& a, const RootValue& b);

// A finite sum  sum_i coef_i * radicand_i^(1/degree_i)  with rational
// coefficients, closed under the comparisons the bound verifiers need.
//
// Terms are kept canonical: degree-1 terms are folded into a single rational
// term, perfect d-th power parts of radicands are moved into the coefficient
// (so e.g. 8^(1/2) and 2*2^(1/2) merge), and terms with equal (radicand,
// degree) are combined. sign() first tries the all-one-sign shortcut, then
// shrinking rational enclosures of each root (floor k-th roots at b bits,
// b doubling); it terminates for every sum that is not exactly zero, and the
// canonicalization catches the zero sums this library can produce.
class RadicalSum {
 public:
  struct Term {
    Rational coef;
    Rational radicand;
    unsigned degree;
  };

  RadicalSum() = default;
  explicit RadicalSum(const RootValue& v) { add(Rational(1), v); }

  void add(const Rational& coef, const RootValue& v);
  void add_rational(const Rational& r);
  void subtract(const RadicalSum& other);

  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Exact sign of the value: -1, 0, +1. Throws std::runtime_error if the
  // enclosure refinement hits its precision cap without deciding.
  int sign() const;

  double to_double() const;
  std::string str() const;

 private:
  std::vector<Term> terms_;  // canonical; at most one degree-1 term
};

// sign(a - b); exact.
int compare(const RadicalSum& a, const RadicalSum& b);

}  // namespace walshsum
