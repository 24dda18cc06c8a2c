#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppart/bipolynomial.hpp"
#include "ppart/int_polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/qseries.hpp"
#include "ppart/rational_polynomial.hpp"
#include "ppart/report.hpp"

namespace ppart {

/// Sum over linear extensions of t^des q^maj.
struct DescentGF {
  BiPolynomial poly;
  int p = 0;

  /// W_s: the q-polynomial of extensions with s descents.
  IntPolynomial w(int s) const;
  /// Sum of t^des (q = 1).
  IntPolynomial w_polynomial() const { return poly.at_q_one(); }
  Integer extension_count() const { return poly.coefficient_sum(); }
};

DescentGF descent_gf(const LabeledPoset& P);

/// Generating function of (P,w)-partitions with largest part <= m.
IntPolynomial u_m(const LabeledPoset& P, int m);
/// The same closed form at any integer m, as a Laurent polynomial in q.
BiPolynomial u_m_laurent(const LabeledPoset& P, long m);
/// N(q) / (1-q)...(1-q^p).
QRational u_gf(const LabeledPoset& P);
/// Sum_m U_m t^m = sum t^des q^maj / (t;q)_{p+1}.
QRational u_m_series(const LabeledPoset& P);
/// Sum_m Omega(m) t^m = sum t^(1+des) / (1-t)^(p+1).
QRational order_series(const LabeledPoset& P);
RationalPolynomial order_polynomial(const LabeledPoset& P);

struct AlphaBetaEntry {
  std::uint64_t set_mask = 0;  // bit j-1 for position j
  Integer alpha;
  Integer beta;
};

/// Indexed by subset mask of [p-1].
struct AlphaBetaTable {
  int p = 0;
  std::vector<AlphaBetaEntry> entries;
  /// beta recovered from alpha by inclusion-exclusion, compared entrywise.
  bool inclusion_exclusion_holds() const;
};

AlphaBetaTable alpha_beta(const LabeledPoset& P);
/// Number of w-compatible chains of order ideals with sizes given by the set.
Integer alpha_from_ideal_chains(const LabeledPoset& P, std::uint64_t set_mask);

/// Extension counts by descents are symmetric under s <-> n - l - s.
bool descent_count_symmetric(const LabeledPoset& P, int n, int l);

Report reciprocity_check(const LabeledPoset& P, int m_max);

/// Right side of the shuffle formula for W_s(P+Q).
IntPolynomial shuffle_w(const LabeledPoset& P, const LabeledPoset& Q, int s);
Report shuffle_identity(const LabeledPoset& P, const LabeledPoset& Q);

/// Disjoint union of chains, chain i of size parts[i] with every label i+1.
LabeledPoset multiset_poset(std::span<const int> parts);

struct MacMahonResult {
  BiPolynomial A;
  Report report;
};

/// Throws SizeLimit when the parts sum past 10.
MacMahonResult macmahon_multiset(std::span<const int> parts, int t_max);

}  // namespace ppart
