#include "ppart/applications.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ppart/errors.hpp"
#include "ppart/perm_stats.hpp"
#include "ppart/ppartition_gf.hpp"
#include "ppart/real_roots.hpp"

namespace ppart {

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, Integer(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 0; --j)
      row[static_cast<std::size_t>(j)] = j == 0 ? Integer(0) : Integer(row[static_cast<std::size_t>(j - 1)] + j * row[static_cast<std::size_t>(j)]);
  return row[static_cast<std::size_t>(k)];
}

StirlingNumerator stirling_numerator(int k) {
  if (k < 0) throw std::invalid_argument("stirling_numerator: k must be nonnegative");
  if (k > 6) throw SizeLimit("stirling_numerator: k > 6");
  const int window = 4 * k + 4;
  std::vector<Integer> series;
  for (int n = 0; n <= window; ++n) series.push_back(stirling2(k + n, n));
  IntPolynomial factor{1};
  for (int i = 0; i < 2 * k + 1; ++i) factor *= IntPolynomial{1, -1};
  const IntPolynomial product = IntPolynomial(series) * factor;

  StirlingNumerator out;
  std::vector<Integer> b;
  for (int d = 0; d <= 2 * k; ++d) b.push_back(product.coeff(d));
  out.B = IntPolynomial(b);
  out.terminates = true;
  for (int d = 2 * k + 1; d <= window; ++d)
    if (product.coeff(d) != 0) out.terminates = false;
  out.nonnegative = std::all_of(b.begin(), b.end(), [](const Integer& c) { return c >= 0; });
  return out;
}

NeggersResult neggers_test(const LabeledPoset& P) {
  NeggersResult out;
  out.W = descent_gf(P).w_polynomial();
  out.real_rooted = real_rooted(out.W);
  return out;
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a b)(i) = a(b(i)).
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return out;
}

}  // namespace

MultiPolynomial multipartite_lambda(int p, int s) {
  if (p < 0 || s < 1) throw std::invalid_argument("multipartite_lambda: need p >= 0 and s >= 1");
  if (p > 5 || s > 3) throw SizeLimit("multipartite_lambda: p > 5 or s > 3");
  std::vector<std::vector<int>> perms;
  std::vector<long> majs;
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    perms.push_back(perm);
    majs.push_back(descent_statistics(perm).maj);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> identity(static_cast<std::size_t>(p));
  std::iota(identity.begin(), identity.end(), 1);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  MultiPolynomial out(s);
  std::vector<int> exps(static_cast<std::size_t>(s), 0);
  // Choose pi_1..pi_{s-1}; pi_s is the inverse of their product.
  std::function<void(int, const std::vector<int>&)> rec = [&](int j, const std::vector<int>& prod) {
    if (j == s - 1) {
      const std::size_t last = index.at(inverse_permutation(prod));
      exps[static_cast<std::size_t>(j)] = static_cast<int>(majs[last]);
      out.add_term(exps, 1);
      return;
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      exps[static_cast<std::size_t>(j)] = static_cast<int>(majs[i]);
      rec(j + 1, compose(prod, perms[i]));
    }
  };
  rec(0, identity);
  return out;
}

PolytopeCounts polytope_counts(const LabeledPoset& P, int m) {
  if (classify_labeling(P) != LabelingKind::natural) throw NotNatural("polytope_counts: labeling is not natural");
  const int p = P.size();
  if (p > 6 || m > 5) throw SizeLimit("polytope_counts: p > 6 or m > 5");
  if (m < 0) throw std::invalid_argument("polytope_counts: negative dilation");
  const auto chains = maximal_chains(P);

  PolytopeCounts out;
  out.order_count = 0;
  out.chain_count = 0;
  std::vector<int> x(static_cast<std::size_t>(p), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == p) {
      bool order_ok = true;
      for (int a = 0; a < p && order_ok; ++a)
        for (int b = 0; b < p; ++b)
          if (P.less(a, b) && x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)]) {
            order_ok = false;
            break;
          }
      if (order_ok) ++out.order_count;
      bool chain_ok = true;
      for (const auto& c : chains) {
        int sum = 0;
        for (Element e : c) sum += x[static_cast<std::size_t>(e)];
        if (sum > m) {
          chain_ok = false;
          break;
        }
      }
      if (chain_ok) ++out.chain_count;
      return;
    }
    for (int v = 0; v <= m; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);

  const Rational omega = order_polynomial(P).evaluate(Rational(m + 1));
  out.omega = omega.get_num();
  out.report.add("order polytope count equals order polynomial", omega == Rational(out.order_count),
                 out.order_count.get_str() + " vs " + omega.get_str());
  out.report.add("order and chain polytope counts agree", out.order_count == out.chain_count,
                 out.order_count.get_str() + " vs " + out.chain_count.get_str());
  return out;
}

}  // namespace ppart
