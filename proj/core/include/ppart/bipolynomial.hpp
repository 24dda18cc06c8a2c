#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ppart/arith.hpp"
#include "ppart/int_polynomial.hpp"

namespace ppart {

struct Exponent {
  int t = 0;
  int q = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse polynomial in t and q. Exponents may be negative, so this also
/// serves as the Laurent ring needed for negative-index q-binomials.
class BiPolynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  BiPolynomial() = default;
  static BiPolynomial term(const Integer& c, int t_exp, int q_exp);
  static BiPolynomial one() { return term(1, 0, 0); }
  static BiPolynomial from_q(const IntPolynomial& f);
  static BiPolynomial from_t(const IntPolynomial& f);

  void add_term(int t_exp, int q_exp, const Integer& c);
  Integer coeff(int t_exp, int q_exp) const;
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True when every exponent is nonnegative.
  bool is_polynomial() const;
  int max_t() const;
  int min_q() const;
  int max_q() const;
  Integer coefficient_sum() const;

  BiPolynomial shifted(int dt, int dq) const;
  /// Substitutes q -> 1/q.
  BiPolynomial q_inverted() const;
  /// Coefficient of t^s, as a polynomial in q alone.
  BiPolynomial t_slice(int s) const;
  /// Substitutes q = 1; requires nonnegative t exponents.
  IntPolynomial at_q_one() const;
  /// Substitutes t = 1.
  BiPolynomial at_t_one() const;
  /// Interprets a q-only, nonnegative polynomial as univariate in q.
  std::optional<IntPolynomial> as_q_polynomial() const;

  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  BiPolynomial& operator*=(const Integer& c);
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
  friend BiPolynomial operator*(BiPolynomial a, const Integer& c) { return a *= c; }
  BiPolynomial operator-() const;
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

  /// Canonical rendering: increasing total degree, t-heavier terms first.
  std::string to_string(std::string_view t_var = "t", std::string_view q_var = "q") const;

 private:
  TermMap terms_;
};

}  // namespace ppart
