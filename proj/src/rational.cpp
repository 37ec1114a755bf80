#include "walshsum/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace walshsum {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_u64(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("rat_u64: zero denominator");
  mpz_class n, d;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(num), 0, 0, &num);
  mpz_import(d.get_mpz_t(), 1, 1, sizeof(den), 0, 0, &den);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational rat_pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  return out;  // canonical since base was canonical
}

Rational pow2(int e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
  } else {
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), -e);
  }
  return r;
}

double rat_to_double(const Rational& r) { return r.get_d(); }

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational rat_parse(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("rat_parse: bad rational '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
  r.canonicalize();
  return r;
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace walshsum
