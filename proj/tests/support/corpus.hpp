#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "ppart/poset.hpp"

namespace ppart::testing {

/// Every partial order on {0..p-1}, as strict relation lists.
inline std::vector<std::vector<std::pair<Element, Element>>> all_orders(int p) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (a != b) slots.emplace_back(a, b);
  std::vector<std::vector<std::pair<Element, Element>>> out;
  const std::uint64_t n = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    std::vector<std::vector<bool>> r(p, std::vector<bool>(p, false));
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) r[slots[i].first][slots[i].second] = true;
    bool ok = true;
    for (int a = 0; a < p && ok; ++a)
      for (int b = 0; b < p && ok; ++b) {
        if (r[a][b] && r[b][a]) ok = false;
        for (int c = 0; c < p && ok; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
      }
    if (!ok) continue;
    std::vector<std::pair<Element, Element>> rel;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        if (r[a][b]) rel.emplace_back(a, b);
    out.push_back(std::move(rel));
  }
  return out;
}

/// All labeled posets on at most max_p elements with labels a permutation of
/// 1..p. Visits each (order, labeling) pair once.
inline void for_each_small_poset(int max_p, const std::function<void(const LabeledPoset&)>& visit) {
  for (int p = 0; p <= max_p; ++p) {
    const auto orders = all_orders(p);
    std::vector<Label> labels(p);
    std::iota(labels.begin(), labels.end(), 1);
    do {
      for (const auto& rel : orders) visit(LabeledPoset(p, rel, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
}

/// Naturally labeled posets only, one per order.
inline void for_each_small_natural_poset(int max_p, const std::function<void(const LabeledPoset&)>& visit) {
  for (int p = 0; p <= max_p; ++p)
    for (const auto& rel : all_orders(p)) {
      // Relations i<j only occur between indices in some topological order;
      // relabel along the first linear extension to make it natural.
      const LabeledPoset P(p, rel, natural_labels(p));
      const auto ext = linear_extensions(P);
      std::vector<Label> labels(p);
      for (int i = 0; i < p; ++i) labels[ext.front().order[i]] = i + 1;
      visit(P.relabeled(labels));
    }
}

/// Random order: edges i -> j for i < j kept with probability `density`, then
/// elements and labels shuffled.
inline LabeledPoset random_poset(std::mt19937_64& rng, int p, double density = 0.35) {
  std::bernoulli_distribution edge(density);
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<Element, Element>> rel;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (edge(rng)) rel.emplace_back(perm[i], perm[j]);
  std::vector<Label> labels(p);
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  return LabeledPoset(p, rel, labels);
}

inline LabeledPoset figure_one() { return LabeledPoset::from_covers(3, {{2, 1}, {2, 3}}); }

}  // namespace ppart::testing
