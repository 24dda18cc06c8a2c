#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/arith.hpp"

namespace ppart {

/// Sparse polynomial in a fixed number of variables x_1..x_n, keyed by
/// exponent vectors of length n. Houses truncated quasi-symmetric
/// expansions and the multipartite numerators.
class MultiPolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Integer>;

  explicit MultiPolynomial(int n_vars = 0) : n_vars_(n_vars) {}
  static MultiPolynomial constant(int n_vars, const Integer& c);
  /// x_index with index 1-based.
  static MultiPolynomial variable(int n_vars, int index);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Integer& c);
  /// Sum of exponents when homogeneous, -1 when zero or mixed.
  int homogeneous_degree() const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  MultiPolynomial& operator*=(const Integer& c);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator*(MultiPolynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

  /// Variables render as <prefix><index>, e.g. "x1^2*x3".
  std::string to_string(std::string_view prefix = "x") const;

 private:
  void check_arity(const MultiPolynomial& o) const;
  int n_vars_;
  TermMap terms_;
};

}  // namespace ppart
