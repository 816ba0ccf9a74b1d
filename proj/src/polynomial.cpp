#include "frobknot/polynomial.hpp"

namespace frobknot {

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coeff, long exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPolynomial::add_term(long exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Integer LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::rescale_exponents(long num, long den) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    if ((e * num) % den != 0) throw Error("exponent " + std::to_string(e) + " does not rescale evenly");
    out.add_term(e * num / den, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::negate_variable() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e, (e % 2 == 0) ? c : Integer(-c));
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Integer c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (e == 0) {
      s += c.get_str();
      continue;
    }
    if (c != 1) s += c.get_str() + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace frobknot
