#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ppart/arith.hpp"
#include "ppart/bipolynomial.hpp"
#include "ppart/int_polynomial.hpp"

namespace ppart {

/// The factor (1 - t^t_exp q^q_exp) with t_exp in {0, 1}.
struct QFactor {
  int t_exp = 0;
  int q_exp = 0;
  auto operator<=>(const QFactor&) const = default;

  BiPolynomial expanded() const;
  std::string to_string() const;
};

/// Numerator over a product of (1 - t q^a) / (1 - q^a) factors. Denominators
/// stay factored; identities are decided by cross-multiplication or by
/// truncated series.
class QRational {
 public:
  QRational() = default;
  explicit QRational(BiPolynomial numerator, std::vector<QFactor> denominator = {});

  const BiPolynomial& numerator() const { return numerator_; }
  const std::vector<QFactor>& denominator() const { return denominator_; }

  /// Exact division of the numerator by every denominator factor; empty when
  /// the quotient is not a (Laurent) polynomial.
  std::optional<BiPolynomial> reduce() const;
  /// Substitutes q -> 1/q; only for q-only denominators.
  QRational q_inverted() const;
  /// Substitutes q = 1; only for denominators made of t-factors.
  QRational at_q_one() const;

  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const BiPolynomial& b);

  /// Same rational function, decided by cross-multiplication.
  bool same_function(const QRational& other) const;

  std::string to_string() const;

 private:
  BiPolynomial numerator_;
  std::vector<QFactor> denominator_;
};

/// Factors of (a; q)_n for a = t^t_exp q^shift.
std::vector<QFactor> q_pochhammer(int t_exp, int shift, int n);

/// [n choose k]_q as the product over (q;q)_k, for any integer n.
QRational q_binomial(long n, int k);
/// The reduced q-binomial (a Laurent polynomial for negative n).
BiPolynomial q_binomial_laurent(long n, int k);
/// Gaussian polynomial by the q-Pascal recurrence; zero unless 0 <= k <= n.
IntPolynomial gaussian_binomial(int n, int k);
/// 1 + q + ... + q^(n-1).
IntPolynomial q_integer(int n);

/// Dense truncated Taylor coefficients up to t^t_max q^q_max.
class SeriesTable {
 public:
  SeriesTable(int t_max, int q_max);
  int t_max() const { return t_max_; }
  int q_max() const { return q_max_; }
  Integer& at(int i, int j) { return data_[index(i, j)]; }
  const Integer& at(int i, int j) const { return data_[index(i, j)]; }
  /// Coefficient of t^i as a polynomial in q, truncated at q_max.
  IntPolynomial t_row(int i) const;
  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

 private:
  std::size_t index(int i, int j) const;
  int t_max_;
  int q_max_;
  std::vector<Integer> data_;
};

/// Requires a polynomial numerator (no negative exponents).
SeriesTable series_coefficients(const QRational& f, int t_max, int q_max);
/// Truncates a polynomial into the same grid.
SeriesTable series_of(const BiPolynomial& f, int t_max, int q_max);

}  // namespace ppart
