#pragma once

#include "ppart/arith.hpp"
#include "ppart/int_polynomial.hpp"
#include "ppart/multi_polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/report.hpp"

namespace ppart {

/// S(n,k), second kind.
Integer stirling2(int n, int k);

struct StirlingNumerator {
  IntPolynomial B;
  bool nonnegative = false;
  /// The product with (1-t)^(2k+1) vanished past degree 2k on the checked window.
  bool terminates = false;
};

/// B_k(t) = (1-t)^(2k+1) sum_n S(k+n,n) t^n. Throws SizeLimit for k > 6.
StirlingNumerator stirling_numerator(int k);

struct NeggersResult {
  IntPolynomial W;
  bool real_rooted = false;
};

NeggersResult neggers_test(const LabeledPoset& P);

/// Sum over s-tuples of permutations of [p] with identity product of
/// prod q_j^{maj(pi_j)}, in s variables. Throws SizeLimit past p = 5 or s = 3.
MultiPolynomial multipartite_lambda(int p, int s);

struct PolytopeCounts {
  Integer order_count;
  Integer chain_count;
  Integer omega;  // order polynomial at m+1
  Report report;
};

/// Lattice points of the m-th dilates of the order and chain polytopes.
/// Throws NotNatural or SizeLimit (p > 6 or m > 5).
PolytopeCounts polytope_counts(const LabeledPoset& P, int m);

}  // namespace ppart
