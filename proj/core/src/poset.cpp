#include "ppart/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ppart/errors.hpp"

namespace ppart {

namespace {

bool test_bit(ElementMask m, int i) { return (m >> i) & 1U; }
ElementMask bit(int i) { return ElementMask{1} << i; }

}  // namespace

std::vector<Element> OrderIdeal::members() const {
  std::vector<Element> out;
  for (int i = 0; i < kMaxPosetSize; ++i)
    if (test_bit(mask, i)) out.push_back(i);
  return out;
}

std::vector<Label> natural_labels(int p) {
  std::vector<Label> out(static_cast<std::size_t>(p));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

LabeledPoset::LabeledPoset(int p, const std::vector<std::pair<Element, Element>>& relations, std::vector<Label> labels)
    : p_(p), below_(static_cast<std::size_t>(p), 0), above_(static_cast<std::size_t>(p), 0), labels_(std::move(labels)) {
  if (p < 0) throw SizeLimit("poset size must be nonnegative");
  if (p > kMaxPosetSize) throw SizeLimit("poset size exceeds " + std::to_string(kMaxPosetSize));
  if (static_cast<int>(labels_.size()) != p) throw LabelError("expected one label per element");
  for (auto [x, y] : relations) {
    if (x < 0 || y < 0 || x >= p || y >= p) throw std::out_of_range("relation references a missing element");
    if (x == y) throw CycleError("relation contains a loop at element " + std::to_string(x + 1));
    below_[static_cast<std::size_t>(y)] |= bit(x);
  }
  // Warshall closure over bitmasks.
  for (int k = 0; k < p; ++k)
    for (int y = 0; y < p; ++y)
      if (test_bit(below_[static_cast<std::size_t>(y)], k)) below_[static_cast<std::size_t>(y)] |= below_[static_cast<std::size_t>(k)];
  for (int y = 0; y < p; ++y)
    if (test_bit(below_[static_cast<std::size_t>(y)], y)) throw CycleError("covers induce a directed cycle through element " + std::to_string(y + 1));
  for (int y = 0; y < p; ++y)
    for (int x = 0; x < p; ++x)
      if (test_bit(below_[static_cast<std::size_t>(y)], x)) above_[static_cast<std::size_t>(x)] |= bit(y);
  validate_labels();

  // rank_: position along the extension that repeatedly takes the smallest
  // available index.
  rank_.assign(static_cast<std::size_t>(p), 0);
  ElementMask placed = 0;
  for (int pos = 0; pos < p; ++pos) {
    for (int x = 0; x < p; ++x) {
      if (test_bit(placed, x)) continue;
      if ((below_[static_cast<std::size_t>(x)] & ~placed) == 0) {
        rank_[static_cast<std::size_t>(x)] = pos;
        placed |= bit(x);
        break;
      }
    }
  }
}

void LabeledPoset::validate_labels() const {
  for (int x = 0; x < p_; ++x) {
    if (labels_[static_cast<std::size_t>(x)] <= 0) throw LabelError("labels must be positive");
    for (int y = x + 1; y < p_; ++y)
      if (!comparable(x, y) && labels_[static_cast<std::size_t>(x)] == labels_[static_cast<std::size_t>(y)])
        throw LabelError("incomparable elements " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                         " share label " + std::to_string(labels_[static_cast<std::size_t>(x)]));
  }
}

LabeledPoset LabeledPoset::from_covers(int p, const std::vector<std::pair<int, int>>& covers, std::vector<Label> labels) {
  if (labels.empty()) labels = natural_labels(p);
  std::vector<std::pair<Element, Element>> rel;
  rel.reserve(covers.size());
  for (auto [x, y] : covers) {
    if (x < 1 || y < 1 || x > p || y > p)
      throw std::out_of_range("cover (" + std::to_string(x) + "," + std::to_string(y) + ") outside 1.." + std::to_string(p));
    rel.emplace_back(x - 1, y - 1);
  }
  return LabeledPoset(p, rel, std::move(labels));
}

LabeledPoset LabeledPoset::chain(std::vector<Label> labels) {
  const int p = static_cast<int>(labels.size());
  std::vector<std::pair<Element, Element>> rel;
  for (int i = 0; i + 1 < p; ++i) rel.emplace_back(i, i + 1);
  return LabeledPoset(p, rel, std::move(labels));
}

LabeledPoset LabeledPoset::antichain(std::vector<Label> labels) {
  const int p = static_cast<int>(labels.size());
  return LabeledPoset(p, {}, std::move(labels));
}

std::vector<std::pair<Element, Element>> LabeledPoset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (int x = 0; x < p_; ++x)
    for (int y = 0; y < p_; ++y)
      if (less(x, y) && (above_[static_cast<std::size_t>(x)] & below_[static_cast<std::size_t>(y)]) == 0) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<Element, Element>> LabeledPoset::relation() const {
  std::vector<std::pair<Element, Element>> out;
  for (int x = 0; x < p_; ++x)
    for (int y = 0; y < p_; ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

bool LabeledPoset::is_proper() const {
  std::vector<Label> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  return sorted == natural_labels(p_);
}

LabeledPoset LabeledPoset::relabeled(std::vector<Label> labels) const {
  if (static_cast<int>(labels.size()) != p_) throw LabelError("expected one label per element");
  LabeledPoset out = *this;
  out.labels_ = std::move(labels);
  out.validate_labels();
  return out;
}

namespace {

struct ExtensionWalker {
  const LabeledPoset& P;
  const ExtensionVisitor& visit;
  std::vector<Element> by_label;
  std::vector<Element> order;
  std::vector<Label> word;

  void run(ElementMask placed) {
    if (static_cast<int>(order.size()) == P.size()) {
      visit(order, word);
      return;
    }
    for (Element x : by_label) {
      if (test_bit(placed, x) || (P.below(x) & ~placed) != 0) continue;
      order.push_back(x);
      word.push_back(P.label(x));
      run(placed | bit(x));
      order.pop_back();
      word.pop_back();
    }
  }
};

}  // namespace

void for_each_linear_extension(const LabeledPoset& P, const ExtensionVisitor& visit) {
  ExtensionWalker w{P, visit, {}, {}, {}};
  w.by_label.resize(static_cast<std::size_t>(P.size()));
  std::iota(w.by_label.begin(), w.by_label.end(), 0);
  // Available elements are pairwise incomparable, so their labels differ and
  // this order yields label words in lexicographic order.
  std::sort(w.by_label.begin(), w.by_label.end(),
            [&](Element a, Element b) { return std::pair(P.label(a), P.rank()[a]) < std::pair(P.label(b), P.rank()[b]); });
  w.order.reserve(static_cast<std::size_t>(P.size()));
  w.word.reserve(static_cast<std::size_t>(P.size()));
  w.run(0);
}

std::vector<LinearExtension> linear_extensions(const LabeledPoset& P) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(P, [&](std::span<const Element> order, std::span<const Label> word) {
    out.push_back({{order.begin(), order.end()}, {word.begin(), word.end()}});
  });
  return out;
}

std::uint64_t count_linear_extensions(const LabeledPoset& P) {
  std::map<ElementMask, std::uint64_t> ways{{0, 1}};
  for (int step = 0; step < P.size(); ++step) {
    std::map<ElementMask, std::uint64_t> next;
    for (const auto& [ideal, n] : ways)
      for (int x = 0; x < P.size(); ++x)
        if (!test_bit(ideal, x) && (P.below(x) & ~ideal) == 0) next[ideal | bit(x)] += n;
    ways = std::move(next);
  }
  return ways.empty() ? 0 : ways.begin()->second;
}

LabeledPoset complement_labeling(const LabeledPoset& P) {
  if (!P.is_proper()) throw ImproperLabeling("complementary labeling needs labels forming a bijection onto 1..p");
  std::vector<Label> labels(P.labels().begin(), P.labels().end());
  for (auto& l : labels) l = P.size() + 1 - l;
  return P.relabeled(std::move(labels));
}

LabelingKind classify_labeling(const LabeledPoset& P) {
  bool up = true;
  bool down = true;
  for (auto [x, y] : P.covers()) {
    if (P.label(x) < P.label(y)) down = false;
    else if (P.label(x) > P.label(y)) up = false;
    else down = false;  // equal labels act as an ascent
  }
  if (up) return LabelingKind::natural;
  if (down) return LabelingKind::strict;
  return LabelingKind::mixed;
}

bool labelings_equivalent(const LabeledPoset& P, std::span<const Label> w1, std::span<const Label> w2) {
  if (static_cast<int>(w1.size()) != P.size() || static_cast<int>(w2.size()) != P.size())
    throw LabelError("labeling length mismatch");
  for (auto [x, y] : P.covers()) {
    const bool d1 = w1[static_cast<std::size_t>(x)] > w1[static_cast<std::size_t>(y)];
    const bool d2 = w2[static_cast<std::size_t>(x)] > w2[static_cast<std::size_t>(y)];
    if (d1 != d2) return false;
  }
  return true;
}

LabeledPoset disjoint_union(const LabeledPoset& A, const LabeledPoset& B) {
  const std::set<Label> a(A.labels().begin(), A.labels().end());
  for (Label l : B.labels())
    if (a.count(l)) throw LabelClash("label " + std::to_string(l) + " appears in both posets");
  std::vector<std::pair<Element, Element>> rel = A.relation();
  for (auto [x, y] : B.relation()) rel.emplace_back(x + A.size(), y + A.size());
  std::vector<Label> labels(A.labels().begin(), A.labels().end());
  labels.insert(labels.end(), B.labels().begin(), B.labels().end());
  return LabeledPoset(A.size() + B.size(), rel, std::move(labels));
}

bool is_order_ideal(const LabeledPoset& P, ElementMask mask) {
  for (int x = 0; x < P.size(); ++x)
    if (test_bit(mask, x) && (P.below(x) & ~mask) != 0) return false;
  return true;
}

std::vector<OrderIdeal> order_ideals(const LabeledPoset& P) {
  // Grow ideals by adding available elements; collects each exactly once.
  std::set<ElementMask> seen{0};
  std::vector<ElementMask> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElementMask> next;
    for (ElementMask m : frontier)
      for (int x = 0; x < P.size(); ++x)
        if (!test_bit(m, x) && (P.below(x) & ~m) == 0 && seen.insert(m | bit(x)).second) next.push_back(m | bit(x));
    frontier = std::move(next);
  }
  std::vector<OrderIdeal> out;
  out.reserve(seen.size());
  for (ElementMask m : seen) out.push_back({m});
  std::sort(out.begin(), out.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    const int sa = std::popcount(a.mask);
    const int sb = std::popcount(b.mask);
    if (sa != sb) return sa < sb;
    return a.members() < b.members();
  });
  return out;
}

std::vector<std::vector<Element>> maximal_chains(const LabeledPoset& P) {
  std::vector<std::vector<Element>> out;
  const auto cov = P.covers();
  std::vector<std::vector<Element>> up(static_cast<std::size_t>(P.size()));
  for (auto [x, y] : cov) up[static_cast<std::size_t>(x)].push_back(y);
  std::vector<Element> path;
  std::function<void(Element)> walk = [&](Element x) {
    path.push_back(x);
    if (up[static_cast<std::size_t>(x)].empty()) out.push_back(path);
    for (Element y : up[static_cast<std::size_t>(x)]) walk(y);
    path.pop_back();
  };
  for (int x = 0; x < P.size(); ++x)
    if (P.below(x) == 0) walk(x);
  return out;
}

std::optional<int> graded_chain_length(const LabeledPoset& P) {
  std::optional<int> len;
  for (const auto& c : maximal_chains(P)) {
    const int l = static_cast<int>(c.size()) - 1;
    if (len && *len != l) return std::nullopt;
    len = l;
  }
  return len.value_or(0);
}

void validate_shape(const Partition& outer, const Partition& inner) {
  if (outer.size() != inner.size()) throw ShapeError("outer and inner shapes must have the same length");
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (inner[i] < 0 || outer[i] < 0) throw ShapeError("shape entries must be nonnegative");
    if (inner[i] > outer[i]) throw ShapeError("inner shape is not contained in outer shape");
    if (i + 1 < outer.size() && (outer[i] < outer[i + 1] || inner[i] < inner[i + 1]))
      throw ShapeError("shapes must be weakly decreasing");
  }
}

std::vector<std::pair<int, int>> skew_cells(const Partition& outer, const Partition& inner) {
  validate_shape(outer, inner);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (int j = inner[i]; j < outer[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  return cells;
}

LabeledPoset shape_to_poset(const Partition& outer, const Partition& inner) {
  const auto cells = skew_cells(outer, inner);
  const int m = static_cast<int>(cells.size());
  std::vector<std::pair<Element, Element>> rel;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && cells[a].first <= cells[b].first && cells[a].second <= cells[b].second) rel.emplace_back(a, b);
  return LabeledPoset(m, rel, natural_labels(m));
}

}  // namespace ppart
