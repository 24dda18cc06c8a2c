#pragma once

#include <vector>

#include "ppart/int_polynomial.hpp"
#include "ppart/rational_polynomial.hpp"

namespace ppart {

/// Sturm chain of f: f, f', then negated remainders.
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& f);

/// Number of distinct real roots, from sign changes of the chain at -inf and +inf.
int distinct_real_roots(const RationalPolynomial& f);

/// f divided by gcd(f, f').
RationalPolynomial squarefree_part(const RationalPolynomial& f);

/// True iff every complex root of f is real. Decided exactly.
/// Throws ZeroPolynomial.
bool real_rooted(const IntPolynomial& f);

}  // namespace ppart
