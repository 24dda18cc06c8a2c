#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "ppart/errors.hpp"
#include "ppart/io.hpp"
#include "ppart/ppartition_gf.hpp"

namespace ppart {
namespace {

TEST(PosetJson, ParsesFigureOne) {
  const LabeledPoset P = poset_from_json(read_text_file(std::string(PPART_TEST_DATA) + "/fig1.json"));
  EXPECT_EQ(P, testing::figure_one());
}

TEST(PosetJson, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledPoset P = testing::random_poset(rng, trial % 7);
    EXPECT_EQ(poset_from_json(poset_to_json(P)), P);
  }
}

TEST(PosetJson, FieldOrderAndDefaults) {
  const LabeledPoset P = poset_from_json(R"({"covers": [[1,2]], "labels": [2,1], "p": 2})");
  EXPECT_EQ(P, LabeledPoset::chain({2, 1}));
  EXPECT_EQ(poset_from_json(R"({"p": 2})"), LabeledPoset::antichain({1, 2}));
}

TEST(PosetJson, Errors) {
  EXPECT_THROW(poset_from_json("{"), FormatError);
  EXPECT_THROW(poset_from_json(R"({"covers": []})"), FormatError);
  EXPECT_THROW(poset_from_json(R"({"p": 2, "covers": [[1,3]]})"), FormatError);
  EXPECT_THROW(poset_from_json(R"({"p": 2, "labels": [1]})"), FormatError);
  EXPECT_THROW(poset_from_json(R"({"p": 3, "covers": [[1,2],[2,3],[3,1]]})"), CycleError);
  EXPECT_THROW(read_text_file("/nonexistent/file.json"), FormatError);
}

TEST(GraphJson, RoundTrip) {
  const SimpleGraph G = graph_from_json(R"({"n": 3, "edges": [[1,2],[2,3]]})");
  EXPECT_EQ(G.vertex_count(), 3);
  EXPECT_EQ(G.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  const SimpleGraph H = graph_from_json(graph_to_json(G));
  EXPECT_EQ(H.edges(), G.edges());
  EXPECT_THROW(graph_from_json(R"({"n": 2, "edges": [[1,1]]})"), FormatError);
}

TEST(ShapeJson, RoundTrip) {
  const auto [outer, inner] = shape_from_json(R"({"outer": [3,2,2], "inner": [2,1,0]})");
  EXPECT_EQ(outer, (Partition{3, 2, 2}));
  EXPECT_EQ(inner, (Partition{2, 1, 0}));
  EXPECT_EQ(shape_from_json(shape_to_json(outer, inner)), std::make_pair(outer, inner));
  EXPECT_EQ(shape_from_json(R"({"outer": [2,2]})").second, (Partition{0, 0}));
  EXPECT_THROW(shape_from_json(R"({"outer": [1], "inner": [2]})"), ShapeError);
}

TEST(CoefficientMaps, RoundTrip) {
  const LabeledPoset F = testing::figure_one();
  const BiPolynomial gf = descent_gf(F).poly;
  const CoefficientMap m = to_coefficient_map(gf);
  EXPECT_EQ(m.at("t^1 q^2"), "1");
  EXPECT_EQ(bipolynomial_from_map(m), gf);

  const IntPolynomial u = u_m(F, 3);
  EXPECT_EQ(int_polynomial_from_map(to_coefficient_map(u, 'q'), 'q'), u);
  EXPECT_EQ(int_polynomial_from_map(to_coefficient_map(u, 't'), 't'), u);

  const RationalPolynomial omega = order_polynomial(F);
  EXPECT_EQ(to_coefficient_map(omega, 'm').at("m^1"), "-1/3");
  EXPECT_EQ(rational_polynomial_from_map(to_coefficient_map(omega, 'm'), 'm'), omega);

  MultiPolynomial x(3);
  x.add_term({1, 0, 2}, 5);
  EXPECT_EQ(to_coefficient_map(x).at("1,0,2"), "5");
  EXPECT_EQ(multi_polynomial_from_map(to_coefficient_map(x), 3), x);
  EXPECT_THROW(bipolynomial_from_map({{"t^1", "1"}}), FormatError);
}

}  // namespace
}  // namespace ppart
