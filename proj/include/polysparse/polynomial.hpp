#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "polysparse/rational.hpp"

namespace polysparse {

// Univariate polynomial in the degree variable k with exact rational coefficients.
// coefficients()[p] is the coefficient of k^p; trailing zeros are never stored, so
// the zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int power);
  // k
  static RationalPolynomial variable();
  // The binomial coefficient C(k + shift, r) as a polynomial in k of degree r:
  // (k+shift)(k+shift-1)...(k+shift-r+1) / r!
  static RationalPolynomial binomial(int shift, int r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;

  // Horner evaluation, exact.
  Rational operator()(const Rational& k) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  // Descending powers with exact coefficients, e.g. "3/2*k + 3/2", "k^4 - 3*k - 1".
  std::string str(std::string_view var = "k") const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace polysparse
