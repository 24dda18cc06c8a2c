#include "ppart/chromatic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ppart/errors.hpp"
#include "ppart/ppartition_gf.hpp"

namespace ppart {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw std::invalid_argument("graph: repeated edge");
    edges_.emplace_back(u, v);
  }
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return SimpleGraph(n, std::move(e));
}

std::vector<std::uint64_t> acyclic_orientations(const SimpleGraph& G) {
  const int n = G.vertex_count();
  if (n > kMaxChromaticVertices) throw SizeLimit("acyclic_orientations: more than 8 vertices");
  // Every acyclic orientation is induced by some vertex order.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(static_cast<std::size_t>(n));
  std::set<std::uint64_t> found;
  do {
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::uint64_t mask = 0;
    for (std::size_t e = 0; e < G.edges().size(); ++e) {
      const auto [u, v] = G.edges()[e];
      if (position[static_cast<std::size_t>(v)] < position[static_cast<std::size_t>(u)]) mask |= std::uint64_t{1} << e;
    }
    found.insert(mask);
  } while (std::next_permutation(order.begin(), order.end()));
  return {found.begin(), found.end()};
}

LabeledPoset orientation_poset(const SimpleGraph& G, std::uint64_t orientation) {
  const int n = G.vertex_count();
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t e = 0; e < G.edges().size(); ++e) {
    const auto [u, v] = G.edges()[e];
    if ((orientation >> e) & 1U)
      rel.emplace_back(v, u);
    else
      rel.emplace_back(u, v);
  }
  const LabeledPoset natural(n, rel, natural_labels(n));
  // Relabel along a linear extension so labels decrease up the order.
  const auto ext = linear_extensions(natural);
  std::vector<Label> labels(static_cast<std::size_t>(n));
  const auto& order = ext.front().order;
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = n - i;
  return natural.relabeled(std::move(labels));
}

RationalPolynomial chromatic_polynomial(const SimpleGraph& G) {
  if (G.vertex_count() > kMaxChromaticVertices) throw SizeLimit("chromatic_polynomial: more than 8 vertices");
  RationalPolynomial out;
  for (std::uint64_t o : acyclic_orientations(G)) out += order_polynomial(orientation_poset(G, o));
  return out;
}

Integer proper_colorings(const SimpleGraph& G, int colors) {
  const int n = G.vertex_count();
  if (colors <= 0) return n == 0 ? Integer(1) : Integer(0);
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  Integer count = 0;
  // Backtracking over vertices in index order.
  auto ok = [&](int v) {
    for (auto [a, b] : G.edges()) {
      const int other = a == v ? b : (b == v ? a : -1);
      if (other >= 0 && other < v && c[static_cast<std::size_t>(other)] == c[static_cast<std::size_t>(v)]) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int k = 0; k < colors; ++k) {
      c[static_cast<std::size_t>(v)] = k;
      if (ok(v)) rec(v + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace ppart
