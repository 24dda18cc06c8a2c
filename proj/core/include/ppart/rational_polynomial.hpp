#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppart/arith.hpp"
#include "ppart/int_polynomial.hpp"

namespace ppart {

/// Univariate polynomial over the rationals (order polynomials, chromatic
/// polynomials, Sturm chains).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  RationalPolynomial(std::initializer_list<Rational> coeffs);
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  explicit RationalPolynomial(const IntPolynomial& f);

  static RationalPolynomial monomial(const Rational& c, int degree);
  static RationalPolynomial constant(const Rational& c) { return monomial(c, 0); }
  /// The linear polynomial x + c.
  static RationalPolynomial linear(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int d) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  /// p(-x).
  RationalPolynomial reflected() const;
  /// p(x + c).
  RationalPolynomial shifted(const Rational& c) const;
  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;
  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  RationalPolynomial operator-() const;
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  std::string to_string(std::string_view var = "m") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
/// Monic greatest common divisor (zero when both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

struct InterpolationPoint {
  Integer argument;
  Rational value;
};

/// Exact Lagrange interpolation through distinct arguments.
/// Throws DuplicateArgument.
RationalPolynomial interpolate(std::span<const InterpolationPoint> points);

}  // namespace ppart
