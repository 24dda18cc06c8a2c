#include "ppart/brute_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ppart/errors.hpp"

namespace ppart {

namespace {

// p * base^p, saturating.
std::uint64_t candidate_count(int p, std::uint64_t base) {
  std::uint64_t total = std::max(p, 1);
  for (int i = 0; i < p; ++i) {
    if (base != 0 && total > UINT64_MAX / base) return UINT64_MAX;
    total *= base;
  }
  return total;
}

// Admissible value pair for x < y; `ascent` is whether the labels rise (or tie).
bool pair_ok(int vx, int vy, bool ascent) { return ascent ? vx >= vy : vx > vy; }

bool ascent(const LabeledPoset& P, Element x, Element y) { return P.label(x) <= P.label(y); }

bool enriched_pair_ok(int vx, int vy, bool asc) {
  const int kx = enriched_key(vx);
  const int ky = enriched_key(vy);
  if (kx != ky) return kx > ky;
  return vx > 0 ? asc : !asc;
}

}  // namespace

bool is_ppartition(const LabeledPoset& P, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != P.size()) return false;
  for (int x = 0; x < P.size(); ++x) {
    if (sigma[static_cast<std::size_t>(x)] < 0) return false;
    for (int y = 0; y < P.size(); ++y)
      if (P.less(x, y) && !pair_ok(sigma[static_cast<std::size_t>(x)], sigma[static_cast<std::size_t>(y)], ascent(P, x, y)))
        return false;
  }
  return true;
}

bool satisfies_chain(const LabeledPoset& P, std::span<const Element> order, std::span<const int> sigma) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const Element a = order[i];
    const Element b = order[i + 1];
    if (!pair_ok(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)], P.label(a) <= P.label(b)))
      return false;
  }
  return true;
}

void for_each_ppartition(const LabeledPoset& P, int m, const std::function<void(std::span<const int>)>& visit,
                         std::uint64_t budget) {
  if (m < 0) throw std::invalid_argument("enumerate_ppartitions: negative bound");
  if (candidate_count(P.size(), static_cast<std::uint64_t>(m) + 1) > budget)
    throw BudgetExceeded("enumerate_ppartitions: p*(m+1)^p exceeds budget " + std::to_string(budget));
  const int p = P.size();
  Assignment sigma(static_cast<std::size_t>(p), 0);
  // Assign elements in index order, checking each against earlier comparable ones.
  std::function<void(int)> rec = [&](int x) {
    if (x == p) {
      visit(sigma);
      return;
    }
    for (int v = 0; v <= m; ++v) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        const int vy = sigma[static_cast<std::size_t>(y)];
        if (P.less(y, x)) ok = pair_ok(vy, v, ascent(P, y, x));
        else if (P.less(x, y)) ok = pair_ok(v, vy, ascent(P, x, y));
      }
      if (!ok) continue;
      sigma[static_cast<std::size_t>(x)] = v;
      rec(x + 1);
    }
  };
  rec(0);
}

std::vector<Assignment> enumerate_ppartitions(const LabeledPoset& P, int m, std::uint64_t budget) {
  std::vector<Assignment> out;
  for_each_ppartition(P, m, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); }, budget);
  return out;
}

LinearExtension canonical_extension(std::span<const int> sigma, const LabeledPoset& P) {
  if (!is_ppartition(P, sigma)) throw InvalidAssignment("canonical_extension: not a (P,w)-partition");
  std::vector<Element> order(static_cast<std::size_t>(P.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    const int va = sigma[static_cast<std::size_t>(a)];
    const int vb = sigma[static_cast<std::size_t>(b)];
    if (va != vb) return va > vb;
    if (P.label(a) != P.label(b)) return P.label(a) < P.label(b);
    return P.rank()[a] < P.rank()[b];
  });
  LinearExtension out;
  out.order = order;
  for (Element x : order) out.word.push_back(P.label(x));
  return out;
}

KnuthPair knuth_pair(std::span<const int> sigma, const LabeledPoset& P) {
  const LinearExtension ext = canonical_extension(sigma, P);
  KnuthPair out;
  for (Element x : ext.order) {
    const int v = sigma[static_cast<std::size_t>(x)];
    if (v == 0) break;  // zeros sort last
    out.values.push_back(v);
    out.elements.push_back(x);
  }
  return out;
}

Assignment knuth_inverse(const KnuthPair& pair, const LabeledPoset& P) {
  if (pair.values.size() != pair.elements.size()) throw InvalidAssignment("knuth_inverse: length mismatch");
  Assignment sigma(static_cast<std::size_t>(P.size()), 0);
  for (std::size_t i = 0; i < pair.values.size(); ++i) {
    const Element x = pair.elements[i];
    if (x < 0 || x >= P.size() || sigma[static_cast<std::size_t>(x)] != 0)
      throw InvalidAssignment("knuth_inverse: elements must be distinct members of P");
    sigma[static_cast<std::size_t>(x)] = pair.values[i];
  }
  return sigma;
}

bool knuth_conditions_hold(const KnuthPair& pair, const LabeledPoset& P) {
  const std::size_t n = pair.values.size();
  if (pair.elements.size() != n) return false;
  ElementMask seen = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (pair.values[j] <= 0) return false;
    if (j + 1 < n && pair.values[j] < pair.values[j + 1]) return false;
    const Element x = pair.elements[j];
    if ((seen >> x) & 1U) return false;
    if ((P.below(x) & ~seen) != 0) return false;  // (S1)
    seen |= ElementMask{1} << x;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {  // (S2)
    const Element a = pair.elements[i];
    const Element b = pair.elements[i + 1];
    const bool drop = std::pair(P.label(a), P.rank()[a]) > std::pair(P.label(b), P.rank()[b]);
    if (drop && !(pair.values[i] > pair.values[i + 1])) return false;
  }
  return true;
}

bool is_enriched_ppartition(const LabeledPoset& P, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != P.size()) return false;
  for (int x = 0; x < P.size(); ++x) {
    if (sigma[static_cast<std::size_t>(x)] == 0) return false;
    for (int y = 0; y < P.size(); ++y)
      if (P.less(x, y) &&
          !enriched_pair_ok(sigma[static_cast<std::size_t>(x)], sigma[static_cast<std::size_t>(y)], ascent(P, x, y)))
        return false;
  }
  return true;
}

void for_each_enriched(const LabeledPoset& P, int n, const std::function<void(std::span<const int>)>& visit,
                       std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("enumerate_enriched: bound must be positive");
  if (candidate_count(P.size(), 2 * static_cast<std::uint64_t>(n)) / std::max(P.size(), 1) > budget)
    throw BudgetExceeded("enumerate_enriched: (2n)^p exceeds budget " + std::to_string(budget));
  std::vector<int> values;
  for (int k = 1; k <= n; ++k) {
    values.push_back(-k);
    values.push_back(k);
  }
  const int p = P.size();
  EnrichedAssignment sigma(static_cast<std::size_t>(p), 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == p) {
      visit(sigma);
      return;
    }
    for (int v : values) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        const int vy = sigma[static_cast<std::size_t>(y)];
        if (P.less(y, x)) ok = enriched_pair_ok(vy, v, ascent(P, y, x));
        else if (P.less(x, y)) ok = enriched_pair_ok(v, vy, ascent(P, x, y));
      }
      if (!ok) continue;
      sigma[static_cast<std::size_t>(x)] = v;
      rec(x + 1);
    }
  };
  rec(0);
}

std::vector<EnrichedAssignment> enumerate_enriched(const LabeledPoset& P, int n, std::uint64_t budget) {
  std::vector<EnrichedAssignment> out;
  for_each_enriched(P, n, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); }, budget);
  return out;
}

MultiPolynomial ppartition_monomial_sum(const LabeledPoset& P, int n_vars, std::uint64_t budget) {
  MultiPolynomial out(n_vars);
  MultiPolynomial::Exponents e(static_cast<std::size_t>(n_vars));
  for_each_ppartition(
      P, n_vars - 1,
      [&](std::span<const int> s) {
        std::fill(e.begin(), e.end(), 0);
        for (int v : s) ++e[static_cast<std::size_t>(v)];
        out.add_term(e, 1);
      },
      budget);
  return out;
}

}  // namespace ppart
