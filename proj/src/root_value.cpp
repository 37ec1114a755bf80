#include "walshsum/root_value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace walshsum {

namespace {

constexpr unsigned kPrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

// Splits z = part^d * rest with rest free of d-th powers of the primes above.
void extract_power_part(mpz_class& z, unsigned d, mpz_class& part) {
  part = 1;
  if (z == 0 || z == 1) return;
  for (unsigned p : kPrimes) {
    if (mpz_cmp_ui(z.get_mpz_t(), p) < 0) break;
    unsigned long e = mpz_remove(z.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t());
    unsigned long keep = e % d;
    if (e >= d) {
      mpz_class back;
      mpz_ui_pow_ui(back.get_mpz_t(), p, e / d);
      part *= back;
    }
    if (keep > 0) {
      mpz_class rem;
      mpz_ui_pow_ui(rem.get_mpz_t(), p, keep);
      z *= rem;
    }
  }
}

// Floor of the d-th root; true iff exact.
bool floor_root(const mpz_class& z, unsigned d, mpz_class& root) {
  return mpz_root(root.get_mpz_t(), z.get_mpz_t(), d) != 0;
}

}  // namespace

RootValue::RootValue(Rational r, unsigned d) : radicand(std::move(r)), degree(d) {
  if (degree == 0) throw std::invalid_argument("RootValue: degree must be >= 1");
  if (degree > 1 && radicand < 0) {
    throw std::invalid_argument("RootValue: negative radicand with degree > 1");
  }
}

bool RootValue::is_rational() const {
  if (degree == 1 || radicand == 0) return true;
  mpz_class rn, rd;
  return floor_root(radicand.get_num(), degree, rn) &&
         floor_root(radicand.get_den(), degree, rd);
}

Rational RootValue::rational_value() const {
  if (degree == 1) return radicand;
  if (radicand == 0) return Rational(0);
  mpz_class rn, rd;
  if (!floor_root(radicand.get_num(), degree, rn) ||
      !floor_root(radicand.get_den(), degree, rd)) {
    throw std::logic_error("RootValue::rational_value: irrational");
  }
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

double RootValue::to_double() const {
  double r = rat_to_double(radicand);
  if (degree == 1) return r;
  return std::pow(r, 1.0 / degree);
}

std::string RootValue::str() const {
  if (degree == 1) return rat_str(radicand);
  return "(" + rat_str(radicand) + ")^(1/" + std::to_string(degree) + ")";
}

int compare(const RootValue& a, const RootValue& b) {
  RadicalSum s(a);
  RadicalSum t(b);
  s.subtract(t);
  return s.sign();
}

bool operator<(const RootValue& a, const RootValue& b) { return compare(a, b) < 0; }
bool operator==(const RootValue& a, const RootValue& b) { return compare(a, b) == 0; }

void RadicalSum::add(const Rational& coef, const RootValue& v) {
  if (coef == 0 || v.radicand == 0) return;
  Rational c = coef;
  Rational rad = v.radicand;
  unsigned deg = v.degree;

  if (deg > 1) {
    // Move perfect d-th power content of the radicand into the coefficient.
    mpz_class num = rad.get_num(), den = rad.get_den();
    mpz_class npart, dpart;
    mpz_class exact;
    if (floor_root(num, deg, exact)) {
      npart = exact;
      num = 1;
    } else {
      extract_power_part(num, deg, npart);
    }
    if (floor_root(den, deg, exact)) {
      dpart = exact;
      den = 1;
    } else {
      extract_power_part(den, deg, dpart);
    }
    Rational scale(npart, dpart);
    scale.canonicalize();
    c *= scale;
    rad = Rational(num, den);
    rad.canonicalize();
    if (rad == 1) deg = 1;
  }
  if (deg == 1) {
    add_rational(c * rad);
    return;
  }
  for (auto& t : terms_) {
    if (t.degree == deg && t.radicand == rad) {
      t.coef += c;
      if (t.coef == 0) {
        terms_.erase(terms_.begin() + (&t - terms_.data()));
      }
      return;
    }
  }
  terms_.push_back(Term{c, rad, deg});
}

void RadicalSum::add_rational(const Rational& r) {
  if (r == 0) return;
  for (auto& t : terms_) {
    if (t.degree == 1) {
      t.coef += r;
      if (t.coef == 0) terms_.erase(terms_.begin() + (&t - terms_.data()));
      return;
    }
  }
  terms_.push_back(Term{r, Rational(1), 1});
}

void RadicalSum::subtract(const RadicalSum& other) {
  for (const auto& t : other.terms_) {
    add(-t.coef, RootValue(t.radicand, t.degree));
  }
}

int RadicalSum::sign() const {
  if (terms_.empty()) return 0;
  bool any_pos = false, any_neg = false;
  for (const auto& t : terms_) {
    (t.coef > 0 ? any_pos : any_neg) = true;
  }
  if (!any_neg) return 1;
  if (!any_pos) return -1;
  if (terms_.size() == 1) return sgn(terms_.front().coef);

  // Mixed signs: refine rational enclosures until the sum's sign separates.
  // For a term c * (p/q)^(1/d) at b bits: with t = floor(p * 2^(d*b) / q) and
  // s = floor(t^(1/d)), the root lies in [s, s+1] / 2^b.
  for (unsigned bits = 64; bits <= (1u << 17); bits *= 2) {
    Rational lo(0), hi(0);
    for (const auto& t : terms_) {
      if (t.degree == 1) {
        lo += t.coef;
        hi += t.coef;
        continue;
      }
      mpz_class scaled = t.radicand.get_num();
      mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
                   static_cast<unsigned long>(t.degree) * bits);
      scaled /= t.radicand.get_den();
      mpz_class s;
      floor_root(scaled, t.degree, s);
      Rational denom = pow2(static_cast<int>(bits));
      Rational root_lo = Rational(s) / denom;
      Rational root_hi = Rational(s + 1) / denom;
      if (t.coef > 0) {
        lo += t.coef * root_lo;
        hi += t.coef * root_hi;
      } else {
        lo += t.coef * root_hi;
        hi += t.coef * root_lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == hi) return sgn(lo);
  }
  throw std::runtime_error(
      "RadicalSum::sign: enclosure refinement undecided at precision cap");
}

double RadicalSum::to_double() const {
  double acc = 0;
  for (const auto& t : terms_) {
    acc += rat_to_double(t.coef) * RootValue(t.radicand, t.degree).to_double();
  }
  return acc;
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.degree == 1) {
      piece = rat_str(t.coef);
    } else {
      piece = rat_str(t.coef) + "*" + RootValue(t.radicand, t.degree).str();
    }
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out;
}

int compare(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum d = a;
  d.subtract(b);
  return d.sign();
}

}  // namespace walshsum
