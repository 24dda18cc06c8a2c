#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ppart/arith.hpp"
#include "ppart/poset.hpp"
#include "ppart/rational_polynomial.hpp"

namespace ppart {

/// Loopless simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  /// Edges are 0-based. Throws std::invalid_argument on loops, repeats or
  /// out-of-range endpoints.
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);
  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

inline constexpr int kMaxChromaticVertices = 8;

/// Bit e set means edge e = (u,v) points v -> u; otherwise u -> v.
std::vector<std::uint64_t> acyclic_orientations(const SimpleGraph& G);
/// The orientation's transitive closure, strictly labeled.
LabeledPoset orientation_poset(const SimpleGraph& G, std::uint64_t orientation);
/// Sum over acyclic orientations of the strict order polynomial. Throws SizeLimit.
RationalPolynomial chromatic_polynomial(const SimpleGraph& G);
/// Direct count of proper colorings with `colors` colors.
Integer proper_colorings(const SimpleGraph& G, int colors);

}  // namespace ppart
