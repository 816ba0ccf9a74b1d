#pragma once

#include "frobknot/ring.hpp"

#include <map>
#include <string>

namespace frobknot {

/// Integer Laurent polynomial in one variable. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long constant) { add_term(0, constant); }  // NOLINT(google-explicit-constructor)
  static LaurentPolynomial monomial(const Integer& coeff, long exponent);

  void add_term(long exponent, const Integer& coeff);
  Integer coefficient(long exponent) const;
  const std::map<long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Multiply every exponent by num/den; throws if one does not divide.
  LaurentPolynomial rescale_exponents(long num, long den) const;
  /// Replace the variable by its negative.
  LaurentPolynomial negate_variable() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  /// Highest power first, e.g. "-A^4 - A^-4", "q + q^-1", "1", "0".
  std::string to_string(const std::string& var) const;

 private:
  std::map<long, Integer> terms_;
};

}  // namespace frobknot
