#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/arith.hpp"

namespace ppart {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index is degree; trailing zeros are always trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(const Integer& c, int degree);
  static IntPolynomial constant(const Integer& c) { return monomial(c, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int valuation() const;
  Integer coeff(int d) const;
  std::span<const Integer> coefficients() const { return coeffs_; }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  IntPolynomial derivative() const;
  /// f(x) / x^k; requires k <= valuation().
  IntPolynomial divided_by_power(int k) const;
  bool is_palindromic() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace ppart
