#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/arith.hpp"
#include "ppart/brute_oracle.hpp"
#include "ppart/multi_polynomial.hpp"
#include "ppart/poset.hpp"

namespace ppart {

using Composition = std::vector<int>;
/// Truncation of a quasi-symmetric function to finitely many variables.
using MonomialExpansion = MultiPolynomial;

/// Composition of p whose partial sums are the members of `set` (a subset of
/// [p-1], 1-based).
Composition composition_from_set(const std::vector<int>& set, int p);
std::vector<int> set_from_composition(const Composition& alpha);
/// All compositions of p, ordered by their subset masks.
std::vector<Composition> compositions(int p);

/// Sum x_{i_1}...x_{i_p} over 1 <= i_1 <= ... <= i_p <= n_vars, strict at the
/// partial sums of alpha.
MonomialExpansion fundamental_expand(const Composition& alpha, int n_vars);

/// Integer combination of fundamental quasi-symmetric functions.
struct QsymElement {
  int degree = 0;
  std::map<Composition, Integer> coeffs;

  void add(const Composition& alpha, const Integer& c);
  MonomialExpansion expand(int n_vars) const;
  /// "F_{(1,2)} + F_{(2,1)}"; "0" when empty.
  std::string to_string() const;
  friend bool operator==(const QsymElement&, const QsymElement&) = default;
};

/// Sum over linear extensions of F indexed by the reversed descent
/// composition, so that value v of a partition sits on variable v+1.
QsymElement gamma(const LabeledPoset& P);

/// Sum over enriched (P,w)-partitions with |sigma| <= n_vars of prod x_{|sigma(X)|}.
MonomialExpansion delta(const LabeledPoset& P, int n_vars, std::uint64_t budget = kDefaultBudget);
/// The same truncation assembled chain by chain over the linear extensions.
MonomialExpansion delta_by_extensions(const LabeledPoset& P, int n_vars, std::uint64_t budget = kDefaultBudget);
/// Peak set of the complemented word w_i -> p+1-w_i, i.e. the valleys of `word`.
/// With order-reversing enriched partitions this is the peak set that
/// delta(chain(word)) depends on; the peak set of `word` itself does not suffice.
std::vector<int> enriched_peak_set(std::span<const int> word);

/// Sequence operators: S(a)_r = sum_{i<r} a_i and P(a)_r = sum_{i<=r} a_i.
template <class T>
std::vector<T> baxter_s(const std::vector<T>& a, const T& zero) {
  std::vector<T> out;
  out.reserve(a.size());
  T acc = zero;
  for (const T& v : a) {
    out.push_back(acc);
    acc += v;
  }
  return out;
}

template <class T>
std::vector<T> baxter_p(const std::vector<T>& a, const T& zero) {
  std::vector<T> out;
  out.reserve(a.size());
  T acc = zero;
  for (const T& v : a) {
    acc += v;
    out.push_back(acc);
  }
  return out;
}

/// Componentwise product.
template <class T>
std::vector<T> hadamard(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

enum class BaxterOp { S, P };

/// B(aB(b)) + B(bB(a)) == B(a)B(b) + B(theta*ab) on rational sequences.
bool baxter_identity_holds(BaxterOp op, const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const Rational& theta);

/// Evaluates a word such as "xS(xS(xP(x)))" on x = (x_1..x_n) and sums the
/// entries. Throws MalformedWord.
MonomialExpansion baxter_apply(std::string_view word, int n_vars);

}  // namespace ppart
