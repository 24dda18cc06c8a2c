#include <gtest/gtest.h>

#include <map>

#include "corpus.hpp"
#include "ppart/applications.hpp"
#include "ppart/chromatic.hpp"
#include "ppart/errors.hpp"
#include "ppart/kreweras.hpp"
#include "ppart/perm_stats.hpp"
#include "ppart/ppartition_gf.hpp"

namespace ppart {
namespace {

RationalPolynomial falling(std::vector<int> roots) {
  RationalPolynomial out{Rational(1)};
  for (int r : roots) out *= RationalPolynomial::linear(Rational(-r));
  return out;
}

Rational reciprocal_count(const SimpleGraph& G) {
  return chromatic_polynomial(G).evaluate(Rational(-1)) * (G.vertex_count() % 2 ? -1 : 1);
}

TEST(Chromatic, Examples) {
  const SimpleGraph K3 = SimpleGraph::complete(3);
  EXPECT_EQ(chromatic_polynomial(K3), falling({0, 1, 2}));
  EXPECT_EQ(acyclic_orientations(K3).size(), 6u);
  EXPECT_EQ(reciprocal_count(K3), 6);
  EXPECT_EQ(chromatic_polynomial(SimpleGraph(1, {})), falling({0}));
  const SimpleGraph P3 = SimpleGraph::path(3);
  EXPECT_EQ(chromatic_polynomial(P3), falling({0, 1, 1}));
  EXPECT_EQ(reciprocal_count(P3), 4);
  EXPECT_EQ(reciprocal_count(SimpleGraph::complete(4)), 24);
  EXPECT_THROW(chromatic_polynomial(SimpleGraph(9, {})), SizeLimit);
  EXPECT_THROW(SimpleGraph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

std::vector<SimpleGraph> all_graphs(int max_n) {
  std::vector<SimpleGraph> out;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (int mask = 0; mask < (1 << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1) e.push_back(slots[i]);
      out.emplace_back(n, e);
    }
  }
  return out;
}

TEST(Chromatic, MatchesColoringCountsOnSmallGraphs) {
  for (const auto& G : all_graphs(4)) {
    const RationalPolynomial chi = chromatic_polynomial(G);
    for (int lambda = 0; lambda <= 4; ++lambda)
      EXPECT_EQ(chi.evaluate(Rational(lambda)), Rational(proper_colorings(G, lambda)));
    EXPECT_EQ(reciprocal_count(G), Rational(static_cast<long>(acyclic_orientations(G).size())));
  }
}

TEST(Chromatic, OrientationPosetsAreStrict) {
  const SimpleGraph G = SimpleGraph::complete(4);
  for (auto o : acyclic_orientations(G)) {
    const LabeledPoset P = orientation_poset(G, o);
    EXPECT_EQ(classify_labeling(P), LabelingKind::strict);
    EXPECT_EQ(linear_extensions(P).size(), 1u);
  }
}

TEST(Kreweras, Examples) {
  const KrewerasResult one = kreweras({1}, {0}, 8);
  EXPECT_EQ(one.theta, (std::vector<Integer>{1}));
  for (int r = 0; r <= 8; ++r) EXPECT_EQ(one.w[r], r + 1);
  EXPECT_TRUE(one.report.passed());

  const KrewerasResult same = kreweras({2, 1}, {2, 1}, 5);
  EXPECT_EQ(same.theta, (std::vector<Integer>{1}));
  for (const auto& w : same.w) EXPECT_EQ(w, 1);

  const KrewerasResult k = kreweras({3, 2, 2}, {2, 1, 0}, 10);
  EXPECT_EQ(k.theta, (std::vector<Integer>{1, 5, 2}));
  EXPECT_EQ(k.w[1], 10);
  EXPECT_TRUE(k.report.passed());
  EXPECT_THROW(kreweras({7, 6}, {0, 0}, 2), SizeLimit);
  EXPECT_THROW(kreweras({1, 2}, {0, 0}, 2), ShapeError);
}

TEST(Kreweras, WorkedChainHasOneReturn) {
  // (2,1,0) -> (3,1,0) -> (3,1,1) -> (3,2,1) -> (3,2,2): rows 0, 2, 1, 2.
  EXPECT_EQ(count_returns({0, 2, 1, 2}), 1);
  const auto seqs = tableau_row_sequences({3, 2, 2}, {2, 1, 0});
  EXPECT_NE(std::find(seqs.begin(), seqs.end(), std::vector<int>{0, 2, 1, 2}), seqs.end());
}

TEST(Kreweras, IdentityOnAllSmallShapes) {
  int shapes = 0;
  std::function<void(Partition&, std::size_t, int)> outer_rec;
  for (int h = 1; h <= 3; ++h) {
    Partition outer(h);
    outer_rec = [&](Partition& o, std::size_t i, int cap) {
      if (i == o.size()) {
        Partition inner(h);
        std::function<void(std::size_t, int)> inner_rec = [&](std::size_t j, int icap) {
          if (j == inner.size()) {
            int cells = 0;
            for (int r = 0; r < h; ++r) cells += o[r] - inner[r];
            if (cells > 8) return;
            ++shapes;
            const KrewerasResult k = kreweras(o, inner, 10);
            EXPECT_TRUE(k.report.passed());
            return;
          }
          for (int v = 0; v <= std::min(icap, o[j]); ++v) {
            inner[j] = v;
            inner_rec(j + 1, v);
          }
        };
        inner_rec(0, o[0]);
        return;
      }
      for (int v = 0; v <= cap; ++v) {
        o[i] = v;
        outer_rec(o, i + 1, v);
      }
    };
    outer_rec(outer, 0, 8);
  }
  EXPECT_GT(shapes, 100);
}

TEST(Kreweras, NewcombCorrespondence) {
  const auto [outer, inner] = staircase_shape({3, 1, 2});
  EXPECT_EQ(outer, (Partition{6, 3, 2}));
  EXPECT_EQ(inner, (Partition{3, 2, 0}));
  const std::vector<int> parts{3, 1, 2};
  const IntPolynomial w = macmahon_multiset(parts, 2).A.at_q_one();
  const auto theta = kreweras_theta(outer, inner);
  ASSERT_EQ(static_cast<int>(theta.size()), w.degree() + 1);
  for (std::size_t r = 0; r < theta.size(); ++r) EXPECT_EQ(theta[r], w.coeff(static_cast<int>(r)));
}

TEST(Kreweras, Determinant) {
  EXPECT_EQ(integer_determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(integer_determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(integer_determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(integer_determinant({}), 1);
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling_numerator(0).B, IntPolynomial({1}));
  EXPECT_EQ(stirling_numerator(1).B, IntPolynomial({0, 1}));
  EXPECT_EQ(stirling_numerator(2).B, IntPolynomial({0, 1, 2}));
  for (int k = 0; k <= 6; ++k) {
    const StirlingNumerator b = stirling_numerator(k);
    EXPECT_TRUE(b.nonnegative) << k;
    EXPECT_TRUE(b.terminates) << k;
    EXPECT_LE(b.B.degree(), 2 * k);
  }
  EXPECT_THROW(stirling_numerator(7), SizeLimit);
  EXPECT_EQ(stirling2(5, 2), 15);
}

TEST(Neggers, Examples) {
  const NeggersResult f = neggers_test(testing::figure_one());
  EXPECT_EQ(f.W, IntPolynomial({0, 2}));
  EXPECT_TRUE(f.real_rooted);
  EXPECT_EQ(neggers_test(LabeledPoset::chain({1, 2, 3})).W, IntPolynomial({1}));
  const NeggersResult a = neggers_test(LabeledPoset::antichain({1, 2, 3}));
  EXPECT_EQ(a.W, IntPolynomial({1, 4, 1}));
  EXPECT_TRUE(a.real_rooted);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(multipartite_lambda(2, 2).to_string("q"), "1 + q1*q2");
  EXPECT_EQ(multipartite_lambda(1, 3).to_string("q"), "1");
  EXPECT_EQ(multipartite_lambda(2, 1).to_string("q"), "1");
  EXPECT_THROW(multipartite_lambda(6, 2), SizeLimit);
  EXPECT_THROW(multipartite_lambda(3, 4), SizeLimit);
}

TEST(Lambda, RoselleInterpretation) {
  for (int p = 1; p <= 5; ++p) {
    MultiPolynomial expected(2);
    std::vector<int> w = natural_labels(p);
    do expected.add_term({static_cast<int>(descent_statistics(w).maj),
                          static_cast<int>(descent_statistics(inverse_permutation(w)).maj)},
                         1);
    while (std::next_permutation(w.begin(), w.end()));
    EXPECT_EQ(multipartite_lambda(p, 2), expected) << p;
  }
}

// Coefficients of phi_p(q1,q2) up to total degree D: multisets of p points of
// N^2, counted by coordinate sums.
std::map<std::pair<int, int>, Integer> multipartite_series(int p, int D) {
  std::vector<std::pair<int, int>> points;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) points.emplace_back(a, b);
  std::map<std::pair<int, int>, Integer> out;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t start, int left, int sa, int sb) {
    if (sa + sb > D) return;
    if (left == 0) {
      ++out[{sa, sb}];
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) rec(i, left - 1, sa + points[i].first, sb + points[i].second);
  };
  rec(0, p, 0, 0);
  return out;
}

TEST(Lambda, MatchesMultipartiteSeries) {
  const int D = 8;
  for (int p = 1; p <= 3; ++p) {
    // Lambda_p = phi_p * (q1;q1)_p (q2;q2)_p, truncated at total degree D.
    const auto phi = multipartite_series(p, D);
    IntPolynomial poch{1};
    for (int i = 1; i <= p; ++i) poch *= IntPolynomial{1} - IntPolynomial::monomial(1, i);
    std::map<std::pair<int, int>, Integer> prod;
    for (const auto& [e, c] : phi)
      for (int i = 0; i <= poch.degree(); ++i)
        for (int j = 0; j <= poch.degree(); ++j)
          if (e.first + i + e.second + j <= D) prod[{e.first + i, e.second + j}] += c * poch.coeff(i) * poch.coeff(j);
    const MultiPolynomial L = multipartite_lambda(p, 2);
    for (const auto& [e, c] : prod) EXPECT_EQ(L.coeff({e.first, e.second}), c) << p << " " << e.first << "," << e.second;
    for (const auto& [e, c] : L.terms())
      if (e[0] + e[1] <= D) EXPECT_EQ((prod[{e[0], e[1]}]), c);
  }
}

TEST(Polytopes, Examples) {
  const PolytopeCounts one = polytope_counts(LabeledPoset::chain({1}), 3);
  EXPECT_EQ(one.order_count, 4);
  EXPECT_EQ(one.chain_count, 4);
  EXPECT_EQ(one.omega, 4);
  const PolytopeCounts two = polytope_counts(LabeledPoset::chain({1, 2}), 2);
  EXPECT_EQ(two.order_count, 6);
  EXPECT_EQ(two.omega, 6);
  const PolytopeCounts v = polytope_counts(LabeledPoset::from_covers(3, {{1, 2}, {1, 3}}), 1);
  EXPECT_EQ(v.order_count, v.chain_count);
  EXPECT_TRUE(v.report.passed());
  EXPECT_THROW(polytope_counts(testing::figure_one(), 1), NotNatural);
  EXPECT_THROW(polytope_counts(LabeledPoset::chain({1}), 6), SizeLimit);
}

TEST(Polytopes, AllNaturalPosets) {
  testing::for_each_small_natural_poset(4, [](const LabeledPoset& P) {
    for (int m = 0; m <= 3; ++m) EXPECT_TRUE(polytope_counts(P, m).report.passed());
  });
}

}  // namespace
}  // namespace ppart
