#include "ppart/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ppart/errors.hpp"

namespace ppart {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::pair<int, int>> pairs_field(const json& j, const char* key, int bound) {
  std::vector<std::pair<int, int>> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) throw FormatError(std::string("'") + key + "' must be an array");
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw FormatError(std::string("'") + key + "' entries must be integer pairs");
    const int a = e[0].get<int>();
    const int b = e[1].get<int>();
    if (a < 1 || b < 1 || a > bound || b > bound) throw FormatError(std::string("'") + key + "' entry out of range");
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<int> int_array(const json& j, const char* key) {
  if (!j[key].is_array()) throw FormatError(std::string("'") + key + "' must be an array");
  std::vector<int> out;
  for (const auto& e : j[key]) {
    if (!e.is_number_integer()) throw FormatError(std::string("'") + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

int count_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw FormatError(std::string("missing integer field '") + key + "'");
  const int n = j[key].get<int>();
  if (n < 0) throw FormatError(std::string("'") + key + "' must be nonnegative");
  return n;
}

}  // namespace

LabeledPoset poset_from_json(std::string_view text) {
  const json j = parse(text);
  const int p = count_field(j, "p");
  if (p > kMaxPosetSize) throw FormatError("poset too large");
  const auto covers = pairs_field(j, "covers", p);
  std::vector<Label> labels;
  if (j.contains("labels")) {
    labels = int_array(j, "labels");
    if (static_cast<int>(labels.size()) != p) throw FormatError("'labels' must have p entries");
  }
  return LabeledPoset::from_covers(p, covers, labels);
}

std::string poset_to_json(const LabeledPoset& P) {
  json covers = json::array();
  for (auto [x, y] : P.covers()) covers.push_back({x + 1, y + 1});
  json j;
  j["p"] = P.size();
  j["covers"] = covers;
  j["labels"] = std::vector<int>(P.labels().begin(), P.labels().end());
  return j.dump();
}

SimpleGraph graph_from_json(std::string_view text) {
  const json j = parse(text);
  const int n = count_field(j, "n");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : pairs_field(j, "edges", n)) edges.emplace_back(u - 1, v - 1);
  try {
    return SimpleGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string graph_to_json(const SimpleGraph& G) {
  json edges = json::array();
  for (auto [u, v] : G.edges()) edges.push_back({u + 1, v + 1});
  json j;
  j["n"] = G.vertex_count();
  j["edges"] = edges;
  return j.dump();
}

std::pair<Partition, Partition> shape_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("outer")) throw FormatError("missing field 'outer'");
  Partition outer = int_array(j, "outer");
  Partition inner = j.contains("inner") ? int_array(j, "inner") : Partition(outer.size(), 0);
  validate_shape(outer, inner);
  return {outer, inner};
}

std::string shape_to_json(const Partition& outer, const Partition& inner) {
  json j;
  j["outer"] = outer;
  j["inner"] = inner;
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

std::string bi_key(int t, int q) { return "t^" + std::to_string(t) + " q^" + std::to_string(q); }

std::pair<int, int> parse_bi_key(const std::string& key) {
  int t = 0;
  int q = 0;
  char tail = 0;
  if (std::sscanf(key.c_str(), "t^%d q^%d%c", &t, &q, &tail) != 2) throw FormatError("bad coefficient key '" + key + "'");
  return {t, q};
}

Integer parse_integer(const std::string& s) {
  Integer v;
  if (v.set_str(s, 10) != 0) throw FormatError("bad integer '" + s + "'");
  return v;
}

}  // namespace

CoefficientMap to_coefficient_map(const BiPolynomial& f) {
  CoefficientMap out;
  for (const auto& [e, c] : f.terms()) out[bi_key(e.t, e.q)] = c.get_str();
  return out;
}

BiPolynomial bipolynomial_from_map(const CoefficientMap& m) {
  BiPolynomial out;
  for (const auto& [k, v] : m) {
    const auto [t, q] = parse_bi_key(k);
    out.add_term(t, q, parse_integer(v));
  }
  return out;
}

CoefficientMap to_coefficient_map(const IntPolynomial& f, char var) {
  CoefficientMap out;
  for (int d = 0; d <= f.degree(); ++d)
    if (f.coeff(d) != 0) out[var == 'q' ? bi_key(0, d) : bi_key(d, 0)] = f.coeff(d).get_str();
  return out;
}

IntPolynomial int_polynomial_from_map(const CoefficientMap& m, char var) {
  IntPolynomial out;
  for (const auto& [k, v] : m) {
    const auto [t, q] = parse_bi_key(k);
    if ((var == 'q' ? t : q) != 0) throw FormatError("unexpected exponent in key '" + k + "'");
    out += IntPolynomial::monomial(parse_integer(v), var == 'q' ? q : t);
  }
  return out;
}

CoefficientMap to_coefficient_map(const RationalPolynomial& f, char var) {
  CoefficientMap out;
  for (int d = 0; d <= f.degree(); ++d)
    if (f.coeff(d) != 0) out[std::string(1, var) + "^" + std::to_string(d)] = f.coeff(d).get_str();
  return out;
}

RationalPolynomial rational_polynomial_from_map(const CoefficientMap& m, char var) {
  RationalPolynomial out;
  for (const auto& [k, v] : m) {
    if (k.size() < 3 || k[0] != var || k[1] != '^') throw FormatError("bad coefficient key '" + k + "'");
    Rational c;
    if (c.set_str(v, 10) != 0) throw FormatError("bad rational '" + v + "'");
    c.canonicalize();
    out += RationalPolynomial::monomial(c, std::stoi(k.substr(2)));
  }
  return out;
}

CoefficientMap to_coefficient_map(const MultiPolynomial& f) {
  CoefficientMap out;
  for (const auto& [e, c] : f.terms()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    out[key] = c.get_str();
  }
  return out;
}

MultiPolynomial multi_polynomial_from_map(const CoefficientMap& m, int n_vars) {
  MultiPolynomial out(n_vars);
  for (const auto& [k, v] : m) {
    std::vector<int> e;
    std::stringstream ss(k);
    std::string part;
    while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
    if (static_cast<int>(e.size()) != n_vars) throw FormatError("bad exponent key '" + k + "'");
    out.add_term(e, parse_integer(v));
  }
  return out;
}

}  // namespace ppart
