#include "ppart/real_roots.hpp"

#include "ppart/errors.hpp"

namespace ppart {

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& f) {
  std::vector<RationalPolynomial> chain;
  if (f.is_zero()) return chain;
  chain.push_back(f);
  RationalPolynomial d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int distinct_real_roots(const RationalPolynomial& f) {
  const auto chain = sturm_chain(f);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& g : chain) {
    const int lead = sgn(g.leading());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(g.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

RationalPolynomial squarefree_part(const RationalPolynomial& f) {
  if (f.degree() <= 0) return f;
  const RationalPolynomial g = gcd(f, f.derivative());
  return divmod(f, g).first;
}

bool real_rooted(const IntPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("real_rooted: zero polynomial");
  const IntPolynomial core = f.divided_by_power(f.valuation());
  const RationalPolynomial sq = squarefree_part(RationalPolynomial(core));
  if (sq.degree() <= 0) return true;
  return distinct_real_roots(sq) == sq.degree();
}

}  // namespace ppart
