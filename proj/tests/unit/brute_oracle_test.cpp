#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>
#include <random>

#include "corpus.hpp"
#include "ppart/brute_oracle.hpp"
#include "ppart/errors.hpp"
#include "ppart/ppartition_gf.hpp"

namespace ppart {
namespace {

TEST(Enumerate, Examples) {
  const LabeledPoset F = testing::figure_one();
  EXPECT_EQ(enumerate_ppartitions(F, 1), (std::vector<Assignment>{{0, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(enumerate_ppartitions(LabeledPoset::antichain({1, 2}), 1).size(), 4u);
  EXPECT_TRUE(enumerate_ppartitions(LabeledPoset::chain({2, 1}), 0).empty());
  EXPECT_THROW(enumerate_ppartitions(LabeledPoset::antichain(natural_labels(8)), 9, 1000), BudgetExceeded);
}

TEST(Enumerate, MatchesFullScan) {
  testing::for_each_small_poset(3, [](const LabeledPoset& P) {
    const int m = 2;
    std::vector<Assignment> brute;
    Assignment s(P.size(), 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == P.size()) {
        if (is_ppartition(P, s)) brute.push_back(s);
        return;
      }
      for (int v = 0; v <= m; ++v) {
        s[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    EXPECT_EQ(enumerate_ppartitions(P, m), brute);
  });
}

TEST(CanonicalExtension, Examples) {
  const LabeledPoset F = testing::figure_one();
  EXPECT_EQ(canonical_extension(std::vector<int>{0, 1, 1}, F).word, (std::vector<Label>{2, 3, 1}));
  EXPECT_EQ(canonical_extension(std::vector<int>{0, 1, 0}, F).word, (std::vector<Label>{2, 1, 3}));
  EXPECT_EQ(canonical_extension(std::vector<int>{0, 0, 0}, LabeledPoset::chain({1, 2, 3})).word,
            (std::vector<Label>{1, 2, 3}));
  EXPECT_THROW(canonical_extension(std::vector<int>{1, 0, 0}, F), InvalidAssignment);
}

// Solutions of s_1 >= ... >= s_p in 0..m, strict where the word descends.
long long chain_solution_count(const std::vector<Label>& word, int m) {
  const std::size_t p = word.size();
  if (p == 0) return 1;
  std::vector<long long> ways(m + 1, 1);  // ways[v]: sequences ending at value v
  for (std::size_t i = 1; i < p; ++i) {
    const bool strict = word[i - 1] > word[i];
    std::vector<long long> next(m + 1, 0);
    for (int v = 0; v <= m; ++v)
      for (int u = strict ? v + 1 : v; u <= m; ++u) next[v] += ways[u];
    ways = std::move(next);
  }
  long long total = 0;
  for (long long w : ways) total += w;
  return total;
}

void check_fibers(const LabeledPoset& P, int m) {
  const auto all = enumerate_ppartitions(P, m);
  std::map<std::vector<Label>, long long> fiber_size;
  for (const auto& s : all) {
    const LinearExtension e = canonical_extension(s, P);
    ASSERT_TRUE(satisfies_chain(P, e.order, s));
    ++fiber_size[e.word];
  }
  // Fibers are disjoint and sit inside their chain solution sets; equal sizes
  // make them the whole sets, and the totals show nothing is left over.
  long long total = 0;
  for (const auto& e : linear_extensions(P)) {
    const long long c = chain_solution_count(e.word, m);
    EXPECT_EQ(fiber_size[e.word], c);
    total += c;
  }
  EXPECT_EQ(total, static_cast<long long>(all.size()));
}

TEST(FundamentalTheorem, FibersAreChainSolutionSets) {
  testing::for_each_small_poset(3, [](const LabeledPoset& P) {
    const auto all = enumerate_ppartitions(P, 2);
    for (const auto& e : linear_extensions(P))
      for (const auto& s : all)
        EXPECT_EQ(satisfies_chain(P, e.order, s), canonical_extension(s, P).word == e.word);
  });
}

TEST(FundamentalTheorem, FibersPartitionSmallPosets) {
  testing::for_each_small_poset(4, [](const LabeledPoset& P) { check_fibers(P, 2); });
}

TEST(FundamentalTheorem, FibersPartitionRandomPosets) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 200; ++trial) check_fibers(testing::random_poset(rng, size(rng)), trial % 2 ? 2 : 3);
}

TEST(Knuth, Examples) {
  const LabeledPoset F = testing::figure_one();
  const KnuthPair k = knuth_pair(std::vector<int>{0, 2, 1}, F);
  EXPECT_EQ(k.values, (std::vector<int>{2, 1}));
  EXPECT_EQ(k.elements, (std::vector<Element>{1, 2}));
  EXPECT_TRUE(knuth_conditions_hold(k, F));
  EXPECT_THROW(knuth_pair(std::vector<int>{0, 0, 0}, F), InvalidAssignment);  // 2 above 1 needs a strict drop
  const KnuthPair z = knuth_pair(std::vector<int>{0, 1, 0}, F);
  EXPECT_EQ(z.values, (std::vector<int>{1}));
  EXPECT_EQ(z.elements, (std::vector<Element>{1}));
  EXPECT_TRUE(knuth_pair(std::vector<int>{0, 0}, LabeledPoset::chain({1, 2})).values.empty());
  const KnuthPair c = knuth_pair(std::vector<int>{3, 3}, LabeledPoset::chain({1, 2}));
  EXPECT_EQ(c.values, (std::vector<int>{3, 3}));
  EXPECT_EQ(c.elements, (std::vector<Element>{0, 1}));
}

TEST(Knuth, InjectiveWithTwoSidedInverse) {
  testing::for_each_small_poset(4, [](const LabeledPoset& P) {
    std::set<std::pair<std::vector<int>, std::vector<Element>>> seen;
    for (const auto& s : enumerate_ppartitions(P, 2)) {
      const KnuthPair k = knuth_pair(s, P);
      EXPECT_TRUE(knuth_conditions_hold(k, P));
      EXPECT_TRUE(seen.emplace(k.values, k.elements).second);
      EXPECT_EQ(knuth_inverse(k, P), s);
      EXPECT_EQ(knuth_pair(knuth_inverse(k, P), P), k);
    }
  });
}

TEST(Enriched, Examples) {
  EXPECT_EQ(enumerate_enriched(LabeledPoset::chain({1}), 1), (std::vector<EnrichedAssignment>{{-1}, {1}}));
  // (+1,-1) and (+1,+1): (-1,-1) needs a descent, (-1,+1) is increasing.
  EXPECT_EQ(enumerate_enriched(LabeledPoset::chain({1, 2}), 1).size(), 2u);
}

TEST(Enriched, SignPatternsMatchOrdinaryPartitions) {
  testing::for_each_small_poset(3, [](const LabeledPoset& P) {
    if (P.size() == 0) return;
    const int n = 3;
    std::size_t positive = 0, negative = 0;
    for (const auto& s : enumerate_enriched(P, n)) {
      positive += std::all_of(s.begin(), s.end(), [](int v) { return v > 0; });
      negative += std::all_of(s.begin(), s.end(), [](int v) { return v < 0; });
    }
    // Shifting positives down by one gives parts 0..n-1.
    EXPECT_EQ(positive, enumerate_ppartitions(P, n - 1).size());
    EXPECT_EQ(negative, enumerate_ppartitions(complement_labeling(P), n - 1).size());
  });
}

TEST(MonomialSum, MatchesUmAtOneVariable) {
  const LabeledPoset F = testing::figure_one();
  // One variable: only the zero map survives, if it is a partition.
  EXPECT_EQ(ppartition_monomial_sum(F, 1).terms().size(), 0u);
  EXPECT_EQ(ppartition_monomial_sum(LabeledPoset::chain({1, 2}), 1).coeff({2}), 1);
}

}  // namespace
}  // namespace ppart
