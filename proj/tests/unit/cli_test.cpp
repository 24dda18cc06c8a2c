#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "json.hpp"
#include "ppart/applications.hpp"
#include "ppart/chromatic.hpp"
#include "ppart/cli.hpp"
#include "ppart/io.hpp"
#include "ppart/kreweras.hpp"
#include "ppart/ppartition_gf.hpp"
#include "ppart/qsym.hpp"

namespace ppart {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string fig1 = std::string(PPART_TEST_DATA) + "/fig1.json";

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ppart_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

CoefficientMap as_map(const json& j) {
  CoefficientMap m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<std::string>();
  return m;
}

TEST(Cli, Extensions) {
  const Result r = run({"extensions", "--poset", fig1});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "213\n231\n");
}

TEST(Cli, Ugf) {
  const Result r = run({"ugf", "--poset", fig1});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(q + q^2) / ((1-q)*(1-q^2)*(1-q^3))\n");
}

TEST(Cli, NewcombAtQOne) {
  const Result r = run({"newcomb", "--parts", "3,2", "--q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 6*t + 3*t^2\n");
}

TEST(Cli, TextOutputs) {
  EXPECT_EQ(run({"um", "--poset", fig1, "--m", "1"}).out, "q + q^2\n");
  EXPECT_EQ(run({"um", "--poset", fig1, "--m", "1", "--q", "1"}).out, "2\n");
  EXPECT_EQ(run({"orderpoly", "--poset", fig1}).out, "-1/3*m + 1/3*m^3\n");
  EXPECT_EQ(run({"orderpoly", "--poset", fig1, "--m", "4"}).out, "20\n");
  EXPECT_EQ(run({"gamma", "--poset", fig1}).out, "F_{(1,2)} + F_{(2,1)}\n");
  EXPECT_EQ(run({"stirling", "--n", "2"}).out, "t + 2*t^2\n");
  EXPECT_EQ(run({"lambda", "--n", "2", "--m", "2"}).out, "1 + q1*q2\n");
  EXPECT_EQ(run({"neggers", "--poset", fig1}).out, "W: 2*t\nreal-rooted: yes\n");
  EXPECT_EQ(run({"stats", "--poset", fig1}).out,
            "213 des=1 maj=1 S={1}\n231 des=1 maj=2 S={2}\ndescent_gf: t*q + t*q^2\n");
  EXPECT_EQ(run({"delta", "--poset", temp_file("one.json", R"({"p": 1})"), "--n", "1"}).out, "2*x1\n");
}

TEST(Cli, Reports) {
  const Result r = run({"reciprocity", "--poset", fig1});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS U reciprocity"), std::string::npos);
  EXPECT_EQ(run({"shuffle", "--poset", fig1, "--poset", fig1}).code, 0);
  EXPECT_EQ(run({"alphabeta", "--poset", fig1}).code, 0);
  const std::string graph = temp_file("k3.json", R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})");
  const Result c = run({"chromatic", "--graph", graph});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "2*x - 3*x^2 + x^3");
  const std::string shape = temp_file("kshape.json", R"({"outer": [3,2,2], "inner": [2,1,0]})");
  const Result k = run({"kreweras", "--shape", shape, "--tmax", "5"});
  EXPECT_EQ(k.code, 0);
  EXPECT_EQ(k.out.substr(0, k.out.find('\n')), "theta: 1 5 2");
  const Result p = run({"polytopes", "--poset", fig1, "--m", "2"});
  EXPECT_EQ(p.code, 2);  // not naturally labeled
  const std::string v = temp_file("v.json", R"({"p": 3, "covers": [[1,2],[1,3]]})");
  EXPECT_EQ(run({"polytopes", "--poset", v, "--m", "2"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"ugf"}).code, 2);
  EXPECT_EQ(run({"um", "--poset", fig1}).code, 2);
  EXPECT_EQ(run({"ugf", "--poset", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"stats", "--poset", fig1, "--q", "2"}).code, 2);
  EXPECT_EQ(run({"newcomb", "--parts", "3,x"}).code, 2);
  EXPECT_EQ(run({"ugf", "--poset", fig1, "--bogus"}).code, 2);
  EXPECT_FALSE(run({"bogus"}).err.empty());
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"stats", "--poset", fig1, "--json"}, {"verify", "--poset", fig1}, {"gamma", "--poset", fig1, "--n", "3"}})
    EXPECT_EQ(run(args).out, run(args).out);
}

// JSON mode decodes back to the library's in-memory values.
TEST(Cli, JsonRoundTrip) {
  const LabeledPoset F = testing::figure_one();
  const std::string v = temp_file("v2.json", R"({"p": 3, "covers": [[1,2],[1,3]]})");
  const LabeledPoset V = poset_from_json(read_text_file(v));
  auto parse = [](const std::vector<std::string>& args) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
  };

  json j = parse({"extensions", "--poset", fig1, "--json"});
  std::vector<std::vector<int>> words;
  for (const auto& e : linear_extensions(F)) words.push_back(e.word);
  EXPECT_EQ(j["extensions"].get<std::vector<std::vector<int>>>(), words);

  j = parse({"stats", "--poset", fig1, "--json"});
  EXPECT_EQ(bipolynomial_from_map(as_map(j["descent_gf"])), descent_gf(F).poly);

  j = parse({"um", "--poset", fig1, "--m", "3", "--json"});
  EXPECT_EQ(int_polynomial_from_map(as_map(j["u_m"]), 'q'), u_m(F, 3));

  j = parse({"ugf", "--poset", fig1, "--json"});
  EXPECT_EQ(bipolynomial_from_map(as_map(j["numerator"])), u_gf(F).numerator());
  std::vector<QFactor> den;
  for (const auto& d : j["denominator"]) den.push_back({d[0].get<int>(), d[1].get<int>()});
  EXPECT_EQ(den, u_gf(F).denominator());

  j = parse({"orderpoly", "--poset", fig1, "--json"});
  EXPECT_EQ(rational_polynomial_from_map(as_map(j["order_polynomial"]), 'm'), order_polynomial(F));

  j = parse({"alphabeta", "--poset", fig1, "--json"});
  const AlphaBetaTable t = alpha_beta(F);
  ASSERT_EQ(j["entries"].size(), t.entries.size());
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    EXPECT_EQ(j["entries"][i]["alpha"].get<std::string>(), t.entries[i].alpha.get_str());
    EXPECT_EQ(j["entries"][i]["beta"].get<std::string>(), t.entries[i].beta.get_str());
  }

  for (const auto& args : std::vector<std::vector<std::string>>{{"reciprocity", "--poset", fig1, "--json"},
                                                                {"shuffle", "--poset", fig1, "--poset", fig1, "--json"},
                                                                {"verify", "--poset", fig1, "--json"}}) {
    j = parse(args);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_FALSE(j["checks"].empty());
  }
  EXPECT_EQ(parse({"reciprocity", "--poset", fig1, "--json"})["checks"].size(), reciprocity_check(F, 6).checks.size());

  const std::vector<int> parts{3, 2};
  j = parse({"newcomb", "--parts", "3,2", "--json"});
  EXPECT_EQ(bipolynomial_from_map(as_map(j["A"])), macmahon_multiset(parts, 10).A);
  j = parse({"newcomb", "--parts", "3,2", "--q", "1", "--json"});
  EXPECT_EQ(int_polynomial_from_map(as_map(j["A"]), 't'), macmahon_multiset(parts, 10).A.at_q_one());

  j = parse({"gamma", "--poset", fig1, "--n", "3", "--json"});
  EXPECT_EQ(multi_polynomial_from_map(as_map(j["expansion"]), 3), gamma(F).expand(3));
  EXPECT_EQ(j["gamma"]["1,2"].get<std::string>(), "1");

  j = parse({"delta", "--poset", fig1, "--n", "2", "--json"});
  EXPECT_EQ(multi_polynomial_from_map(as_map(j["delta"]), 2), delta(F, 2));

  const std::string graph = temp_file("p3.json", R"({"n": 3, "edges": [[1,2],[2,3]]})");
  j = parse({"chromatic", "--graph", graph, "--json"});
  EXPECT_EQ(rational_polynomial_from_map(as_map(j["chromatic"]), 'x'), chromatic_polynomial(SimpleGraph::path(3)));
  EXPECT_EQ(j["acyclic_orientations"].get<int>(), 4);

  const std::string shape = temp_file("kshape2.json", R"({"outer": [3,2,2], "inner": [2,1,0]})");
  j = parse({"kreweras", "--shape", shape, "--tmax", "6", "--json"});
  const KrewerasResult k = kreweras({3, 2, 2}, {2, 1, 0}, 6);
  std::vector<std::string> theta, w;
  for (const auto& x : k.theta) theta.push_back(x.get_str());
  for (const auto& x : k.w) w.push_back(x.get_str());
  EXPECT_EQ(j["theta"].get<std::vector<std::string>>(), theta);
  EXPECT_EQ(j["w"].get<std::vector<std::string>>(), w);

  j = parse({"stirling", "--n", "3", "--json"});
  EXPECT_EQ(int_polynomial_from_map(as_map(j["B"]), 't'), stirling_numerator(3).B);

  j = parse({"neggers", "--poset", fig1, "--json"});
  EXPECT_EQ(int_polynomial_from_map(as_map(j["W"]), 't'), neggers_test(F).W);
  EXPECT_TRUE(j["real_rooted"].get<bool>());

  j = parse({"lambda", "--n", "3", "--m", "2", "--json"});
  EXPECT_EQ(multi_polynomial_from_map(as_map(j["lambda"]), 2), multipartite_lambda(3, 2));

  j = parse({"polytopes", "--poset", v, "--m", "3", "--json"});
  const PolytopeCounts pc = polytope_counts(V, 3);
  EXPECT_EQ(j["order_count"].get<std::string>(), pc.order_count.get_str());
  EXPECT_EQ(j["chain_count"].get<std::string>(), pc.chain_count.get_str());
}

TEST(Cli, VerifyPassesOnAllSmallPosets) {
  const std::string path = (std::filesystem::temp_directory_path() / "ppart_cli_test_verify.json").string();
  int count = 0;
  testing::for_each_small_poset(4, [&](const LabeledPoset& P) {
    std::ofstream(path) << poset_to_json(P);
    const Result r = run({"verify", "--poset", path});
    EXPECT_EQ(r.code, 0) << poset_to_json(P) << "\n" << r.out;
    ++count;
  });
  EXPECT_GT(count, 5000);
}

}  // namespace
}  // namespace ppart
