#include "walshsum/scalar.hpp"

#include <stdexcept>

namespace walshsum {

LpExponent::LpExponent(Rational p) : infinite_(false), p_(std::move(p)) {
  if (p_ < 1) throw std::invalid_argument("LpExponent: requires p >= 1");
}

LpExponent LpExponent::infinity() { return LpExponent(); }

LpExponent LpExponent::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return LpExponent(rat_parse(text));
}

const Rational& LpExponent::value() const {
  if (infinite_) throw std::logic_error("LpExponent::value: infinite exponent");
  return p_;
}

unsigned long LpExponent::integer_value() const {
  if (!is_integer()) throw std::logic_error("LpExponent::integer_value: not an integer");
  return p_.get_num().get_ui();
}

std::string LpExponent::str() const { return infinite_ ? "inf" : rat_str(p_); }

}  // namespace walshsum
