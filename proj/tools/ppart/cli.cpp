#include "ppart/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppart/applications.hpp"
#include "ppart/brute_oracle.hpp"
#include "ppart/chromatic.hpp"
#include "ppart/errors.hpp"
#include "ppart/io.hpp"
#include "ppart/kreweras.hpp"
#include "ppart/perm_stats.hpp"
#include "ppart/ppartition_gf.hpp"
#include "ppart/qsym.hpp"

namespace ppart::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> posets;
  std::string graph;
  std::string shape;
  std::string parts;
  int m = -1;
  int n = -1;
  int tmax = 10;
  std::string q = "sym";
  bool json = false;
};

std::string word_string(std::span<const int> word) {
  const bool wide = std::any_of(word.begin(), word.end(), [](int l) { return l > 9 || l < 0; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (wide && i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  for (int j = 1; j <= 64; ++j)
    if ((mask >> (j - 1)) & 1U) out.push_back(j);
  return out;
}

json as_json(const CoefficientMap& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"checks", checks}, {"passed", r.passed()}};
}

void print_report(const Report& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

int report_exit(const Report& r) { return r.passed() ? kExitOk : kExitIdentityFailure; }

LabeledPoset load_poset(const Options& o, std::size_t index = 0) {
  if (o.posets.size() <= index) throw UsageError("missing --poset");
  return poset_from_json(read_text_file(o.posets[index]));
}

int require(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing or negative ") + flag);
  return value;
}

bool q_is_one(const Options& o) {
  if (o.q == "1") return true;
  if (o.q == "sym") return false;
  throw UsageError("--q must be 1 or sym");
}

std::vector<int> parse_parts(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--parts must be a comma-separated list of positive integers");
    }
  }
  if (out.empty()) throw UsageError("missing --parts");
  return out;
}

std::vector<std::string> integer_strings(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Subcommands.

int cmd_extensions(const Options& o, std::ostream& out) {
  const LabeledPoset P = load_poset(o);
  const auto ext = linear_extensions(P);
  if (o.json) {
    json words = json::array();
    for (const auto& e : ext) words.push_back(e.word);
    emit(out, {{"extensions", words}});
  } else {
    for (const auto& e : ext) out << word_string(e.word) << '\n';
  }
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const LabeledPoset P = load_poset(o);
  const DescentGF gf = descent_gf(P);
  const bool at_one = q_is_one(o);
  if (o.json) {
    json rows = json::array();
    for (const auto& e : linear_extensions(P)) {
      const DescentStats st = descent_statistics(e.word);
      rows.push_back({{"word", e.word}, {"descents", st.set}, {"des", st.des}, {"maj", st.maj}});
    }
    emit(out, {{"extensions", rows},
               {"descent_gf", at_one ? as_json(to_coefficient_map(gf.w_polynomial(), 't'))
                                     : as_json(to_coefficient_map(gf.poly))}});
    return kExitOk;
  }
  for (const auto& e : linear_extensions(P)) {
    const DescentStats st = descent_statistics(e.word);
    out << word_string(e.word) << " des=" << st.des << " maj=" << st.maj << " S=" << set_string(st.set) << '\n';
  }
  out << "descent_gf: " << (at_one ? gf.w_polynomial().to_string() : gf.poly.to_string()) << '\n';
  return kExitOk;
}

int cmd_um(const Options& o, std::ostream& out) {
  const LabeledPoset P = load_poset(o);
  const int m = require(o.m, "--m");
  const IntPolynomial u = u_m(P, m);
  const bool at_one = q_is_one(o);
  if (o.json) {
    json j = {{"m", m}, {"u_m", as_json(to_coefficient_map(u, 'q'))}};
    if (at_one) j["value"] = u.evaluate(Integer(1)).get_str();
    emit(out, j);
  } else {
    out << (at_one ? u.evaluate(Integer(1)).get_str() : u.to_string("q")) << '\n';
  }
  return kExitOk;
}

int cmd_ugf(const Options& o, std::ostream& out) {
  const LabeledPoset P = load_poset(o);
  if (q_is_one(o)) throw UsageError("ugf has a pole at q = 1");
  const QRational f = u_gf(P);
  if (o.json) {
    json den = json::array();
    for (const auto& d : f.denominator()) den.push_back({d.t_exp, d.q_exp});
    emit(out, {{"numerator", as_json(to_coefficient_map(f.numerator()))}, {"denominator", den}});
  } else {
    out << f.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_orderpoly(const Options& o, std::ostream& out) {
  const LabeledPoset P = load_poset(o);
  const RationalPolynomial omega = order_polynomial(P);
  if (o.json) {
    json j = {{"order_polynomial", as_json(to_coefficient_map(omega, 'm'))}};
    if (o.m >= 0) j["value"] = omega.evaluate(Rational(o.m)).get_str();
    emit(out, j);
  } else if (o.m >= 0) {
    out << omega.evaluate(Rational(o.m)).get_str() << '\n';
  } else {
    out << omega.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_alphabeta(const Options& o, std::ostream& out) {
  const LabeledPoset P = load_poset(o);
  const AlphaBetaTable table = alpha_beta(P);
  const bool ie = table.inclusion_exclusion_holds();
  if (o.json) {
    json rows = json::array();
    for (const auto& e : table.entries)
      rows.push_back({{"set", mask_members(e.set_mask)}, {"alpha", e.alpha.get_str()}, {"beta", e.beta.get_str()}});
    emit(out, {{"entries", rows}, {"inclusion_exclusion", ie}});
  } else {
    for (const auto& e : table.entries)
      out << "S=" << set_string(mask_members(e.set_mask)) << " alpha=" << e.alpha.get_str()
          << " beta=" << e.beta.get_str() << '\n';
    out << (ie ? "PASS" : "FAIL") << " inclusion-exclusion\n";
  }
  return ie ? kExitOk : kExitIdentityFailure;
}

int report_command(const Options& o, std::ostream& out, const Report& r) {
  if (o.json)
    emit(out, report_json(r));
  else
    print_report(r, out);
  return report_exit(r);
}

int cmd_reciprocity(const Options& o, std::ostream& out) {
  return report_command(o, out, reciprocity_check(load_poset(o), o.m >= 0 ? o.m : 6));
}

int cmd_shuffle(const Options& o, std::ostream& out) {
  if (o.posets.size() != 2) throw UsageError("shuffle needs --poset twice");
  return report_command(o, out, shuffle_identity(load_poset(o, 0), load_poset(o, 1)));
}

int cmd_newcomb(const Options& o, std::ostream& out) {
  const std::vector<int> parts = parse_parts(o.parts);
  const MacMahonResult r = macmahon_multiset(parts, o.tmax);
  const bool at_one = q_is_one(o);
  if (o.json) {
    emit(out, {{"A", at_one ? as_json(to_coefficient_map(r.A.at_q_one(), 't')) : as_json(to_coefficient_map(r.A))},
               {"report", report_json(r.report)}});
  } else {
    out << (at_one ? r.A.at_q_one().to_string() : r.A.to_string()) << '\n';
  }
  return report_exit(r.report);
}

int cmd_gamma(const Options& o, std::ostream& out) {
  const QsymElement g = gamma(load_poset(o));
  if (o.json) {
    json coeffs = json::object();
    for (const auto& [alpha, c] : g.coeffs) {
      std::string key;
      for (std::size_t i = 0; i < alpha.size(); ++i) key += (i ? "," : "") + std::to_string(alpha[i]);
      coeffs[key] = c.get_str();
    }
    json j = {{"degree", g.degree}, {"gamma", coeffs}};
    if (o.n > 0) j["expansion"] = as_json(to_coefficient_map(g.expand(o.n)));
    emit(out, j);
  } else {
    out << (o.n > 0 ? g.expand(o.n).to_string() : g.to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  const int n = o.n > 0 ? o.n : 2;
  const MonomialExpansion d = delta(load_poset(o), n);
  if (o.json)
    emit(out, {{"n", n}, {"delta", as_json(to_coefficient_map(d))}});
  else
    out << d.to_string() << '\n';
  return kExitOk;
}

int cmd_chromatic(const Options& o, std::ostream& out) {
  if (o.graph.empty()) throw UsageError("missing --graph");
  const SimpleGraph G = graph_from_json(read_text_file(o.graph));
  const RationalPolynomial chi = chromatic_polynomial(G);
  const std::size_t orientations = acyclic_orientations(G).size();
  const Rational at_minus_one = chi.evaluate(Rational(-1)) * (G.vertex_count() % 2 == 0 ? 1 : -1);
  Report r;
  r.add("(-1)^p chi(-1) equals the acyclic orientation count", at_minus_one == Rational(static_cast<long>(orientations)),
        at_minus_one.get_str() + " vs " + std::to_string(orientations));
  if (o.json) {
    emit(out, {{"chromatic", as_json(to_coefficient_map(chi, 'x'))},
               {"acyclic_orientations", orientations},
               {"report", report_json(r)}});
  } else {
    out << chi.to_string("x") << '\n' << "acyclic orientations: " << orientations << '\n';
    print_report(r, out);
  }
  return report_exit(r);
}

int cmd_kreweras(const Options& o, std::ostream& out) {
  if (o.shape.empty()) throw UsageError("missing --shape");
  const auto [outer, inner] = shape_from_json(read_text_file(o.shape));
  const KrewerasResult r = kreweras(outer, inner, o.tmax);
  if (o.json) {
    emit(out, {{"theta", integer_strings(r.theta)}, {"w", integer_strings(r.w)}, {"report", report_json(r.report)}});
  } else {
    out << "theta: " << join(integer_strings(r.theta)) << '\n' << "w: " << join(integer_strings(r.w)) << '\n';
    print_report(r.report, out);
  }
  return report_exit(r.report);
}

int cmd_stirling(const Options& o, std::ostream& out) {
  const StirlingNumerator b = stirling_numerator(require(o.n, "--n"));
  if (o.json) {
    emit(out, {{"B", as_json(to_coefficient_map(b.B, 't'))}, {"nonnegative", b.nonnegative}, {"terminates", b.terminates}});
  } else {
    out << b.B.to_string() << '\n';
  }
  return b.nonnegative && b.terminates ? kExitOk : kExitIdentityFailure;
}

int cmd_neggers(const Options& o, std::ostream& out) {
  const NeggersResult r = neggers_test(load_poset(o));
  if (o.json)
    emit(out, {{"W", as_json(to_coefficient_map(r.W, 't'))}, {"real_rooted", r.real_rooted}});
  else
    out << "W: " << r.W.to_string() << '\n' << "real-rooted: " << (r.real_rooted ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out) {
  const MultiPolynomial L = multipartite_lambda(require(o.n, "--n"), o.m > 0 ? o.m : 2);
  if (o.json)
    emit(out, {{"s", L.n_vars()}, {"lambda", as_json(to_coefficient_map(L))}});
  else
    out << L.to_string("q") << '\n';
  return kExitOk;
}

int cmd_polytopes(const Options& o, std::ostream& out) {
  const PolytopeCounts c = polytope_counts(load_poset(o), require(o.m, "--m"));
  if (o.json) {
    emit(out, {{"order_count", c.order_count.get_str()},
               {"chain_count", c.chain_count.get_str()},
               {"omega", c.omega.get_str()},
               {"report", report_json(c.report)}});
  } else {
    out << "order polytope: " << c.order_count.get_str() << '\n'
        << "chain polytope: " << c.chain_count.get_str() << '\n'
        << "Omega(m+1): " << c.omega.get_str() << '\n';
    print_report(c.report, out);
  }
  return report_exit(c.report);
}

int cmd_verify(const Options& o, std::ostream& out) { return report_command(o, out, verify_suite(load_poset(o))); }

struct Command {
  const char* name;
  const char* help;
  const char* flags;  // space-separated option names this command accepts
  std::function<int(const Options&, std::ostream&)> body;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"extensions", "List linear extensions as label words", "poset json", cmd_extensions},
      {"stats", "Descent statistics of each linear extension", "poset q json", cmd_stats},
      {"um", "Generating function of partitions with parts at most m", "poset m q json", cmd_um},
      {"ugf", "Generating function of all (P,w)-partitions", "poset q json", cmd_ugf},
      {"orderpoly", "Order polynomial, or its value at --m", "poset m json", cmd_orderpoly},
      {"alphabeta", "Extension counts by descent set", "poset json", cmd_alphabeta},
      {"reciprocity", "Reciprocity identities, bounded check up to --m", "poset m json", cmd_reciprocity},
      {"shuffle", "Shuffle identity for two posets", "poset json", cmd_shuffle},
      {"newcomb", "Multiset permutations by descents and major index", "parts q tmax json", cmd_newcomb},
      {"gamma", "Quasi-symmetric generating function, expanded over --n variables", "poset n json", cmd_gamma},
      {"delta", "Enriched generating function over --n variables", "poset n json", cmd_delta},
      {"chromatic", "Chromatic polynomial via acyclic orientations", "graph json", cmd_chromatic},
      {"kreweras", "Tableaux by returns against the determinant", "shape tmax json", cmd_kreweras},
      {"stirling", "Numerator of the Stirling series for k = --n", "n json", cmd_stirling},
      {"neggers", "Descent polynomial and real-rootedness", "poset json", cmd_neggers},
      {"lambda", "Multipartite numerator for p = --n, s = --m", "n m json", cmd_lambda},
      {"polytopes", "Order and chain polytope lattice points at dilation --m", "poset m json", cmd_polytopes},
      {"verify", "Run the oracle suite on a poset", "poset json", cmd_verify},
  };
  return table;
}

bool has_flag(const char* flags, const std::string& name) {
  std::stringstream ss(flags);
  std::string f;
  while (ss >> f)
    if (f == name) return true;
  return false;
}

}  // namespace

Report verify_suite(const LabeledPoset& P) {
  Report r;
  const int p = P.size();
  const DescentGF gf = descent_gf(P);
  const auto ext = linear_extensions(P);
  r.add("descent_gf counts linear extensions",
        gf.extension_count() == count_linear_extensions(P) && gf.extension_count() == static_cast<long>(ext.size()));

  const int brute_m = p <= 6 ? 3 : (p <= 8 ? 2 : -1);
  if (brute_m >= 0) {
    bool closed_form = true;
    bool fibers = true;
    for (int m = 0; m <= brute_m; ++m) {
      IntPolynomial brute;
      std::map<std::vector<Label>, long> fiber;
      for_each_ppartition(P, m, [&](std::span<const int> sigma) {
        long sum = 0;
        for (int v : sigma) sum += v;
        brute += IntPolynomial::monomial(1, static_cast<int>(sum));
        const LinearExtension e = canonical_extension(sigma, P);
        if (!satisfies_chain(P, e.order, sigma)) fibers = false;
        ++fiber[e.word];
      });
      if (brute != u_m(P, m)) closed_form = false;
      // Each fiber is the solution set of its chain.
      for (const auto& e : ext) {
        const IntPolynomial chain_u = u_m(LabeledPoset::chain(e.word), m);
        if (chain_u.evaluate(Integer(1)) != fiber[e.word]) fibers = false;
      }
    }
    r.add("u_m closed form equals brute sum", closed_form);
    r.add("canonical extensions partition the solutions", fibers);

    const RationalPolynomial omega = order_polynomial(P);
    bool omega_ok = true;
    for (int m = 1; m <= brute_m + 1; ++m)
      omega_ok = omega_ok && omega.evaluate(Rational(m)) ==
                                 Rational(static_cast<long>(enumerate_ppartitions(P, m - 1).size()));
    r.add("order polynomial equals brute count", omega_ok);

    bool knuth = true;
    for (int m = 0; m <= std::min(brute_m, 2); ++m)
      for_each_ppartition(P, m, [&](std::span<const int> sigma) {
        const KnuthPair kp = knuth_pair(sigma, P);
        const Assignment back = knuth_inverse(kp, P);
        if (!knuth_conditions_hold(kp, P) || !std::equal(back.begin(), back.end(), sigma.begin(), sigma.end()))
          knuth = false;
      });
    r.add("Knuth pairs round trip", knuth);
  }

  r.append(reciprocity_check(P, 4));

  if (p <= 8) {
    const AlphaBetaTable table = alpha_beta(P);
    r.add("beta from alpha by inclusion-exclusion", table.inclusion_exclusion_holds());
    if (p <= 6) {
      bool chains = true;
      for (const auto& e : table.entries) chains = chains && alpha_from_ideal_chains(P, e.set_mask) == e.alpha;
      r.add("alpha counts compatible ideal chains", chains);
    }
  }
  if (p <= 7) r.add("gamma expansion equals brute monomial sum", gamma(P).expand(3) == ppartition_monomial_sum(P, 3));
  if (p <= 6) r.add("delta equals sum over extensions", delta(P, 2) == delta_by_extensions(P, 2));
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumeration of (P,w)-partitions and related generating functions", "ppart"};
  app.require_subcommand(1);
  Options o;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (has_flag(c.flags, "poset")) sub->add_option("--poset", o.posets, "Poset JSON file")->expected(1)->take_all();
    if (has_flag(c.flags, "graph")) sub->add_option("--graph", o.graph, "Graph JSON file");
    if (has_flag(c.flags, "shape")) sub->add_option("--shape", o.shape, "Shape JSON file");
    if (has_flag(c.flags, "parts")) sub->add_option("--parts", o.parts, "Comma-separated multiplicities");
    if (has_flag(c.flags, "m")) sub->add_option("--m", o.m, "Bound or dilation");
    if (has_flag(c.flags, "n")) sub->add_option("--n", o.n, "Size or variable count");
    if (has_flag(c.flags, "tmax")) sub->add_option("--tmax", o.tmax, "Series truncation order");
    if (has_flag(c.flags, "q")) sub->add_option("--q", o.q, "1 or sym");
    if (has_flag(c.flags, "json")) sub->add_flag("--json", o.json, "Emit JSON");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& c : commands()) {
    if (!app.got_subcommand(c.name)) continue;
    try {
      return c.body(o, out);
    } catch (const UsageError& e) {
      err << "ppart " << c.name << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err << "ppart " << c.name << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "ppart " << c.name << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace ppart::cli
