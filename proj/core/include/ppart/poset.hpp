#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ppart {

/// Elements are 0-based indices 0..p-1 inside the library; the cover lists
/// accepted by from_covers and the JSON format are 1-based.
using Element = int;
using Label = int;
using ElementMask = std::uint64_t;
using Partition = std::vector<int>;

inline constexpr int kMaxPosetSize = 64;

enum class LabelingKind { natural, strict, mixed };

struct LinearExtension {
  std::vector<Element> order;
  std::vector<Label> word;
  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

struct OrderIdeal {
  ElementMask mask = 0;
  std::vector<Element> members() const;
  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

/// A finite strict partial order on 0..p-1 with a positive integer labeling.
/// Incomparable elements carry distinct labels; comparable elements may share
/// one, in which case the pair behaves as an ascent.
class LabeledPoset {
 public:
  LabeledPoset() = default;
  /// `relations` are 0-based pairs (x, y) meaning x < y; they are closed
  /// transitively. Throws CycleError, LabelError, SizeLimit.
  LabeledPoset(int p, const std::vector<std::pair<Element, Element>>& relations, std::vector<Label> labels);

  /// 1-based covers as in the text format. Empty `labels` means 1..p.
  static LabeledPoset from_covers(int p, const std::vector<std::pair<int, int>>& covers, std::vector<Label> labels = {});
  /// Element i < i+1, labels read bottom to top.
  static LabeledPoset chain(std::vector<Label> labels);
  static LabeledPoset antichain(std::vector<Label> labels);

  int size() const { return p_; }
  bool less(Element x, Element y) const { return (below_[static_cast<std::size_t>(y)] >> x) & 1U; }
  bool comparable(Element x, Element y) const { return less(x, y) || less(y, x); }
  /// Elements strictly below x.
  ElementMask below(Element x) const { return below_[static_cast<std::size_t>(x)]; }
  ElementMask above(Element x) const { return above_[static_cast<std::size_t>(x)]; }
  Label label(Element x) const { return labels_[static_cast<std::size_t>(x)]; }
  std::span<const Label> labels() const { return labels_; }
  ElementMask all_elements() const { return p_ == 64 ? ~ElementMask{0} : ((ElementMask{1} << p_) - 1); }

  /// 0-based covering pairs (x, y): x < y with nothing in between.
  std::vector<std::pair<Element, Element>> covers() const;
  std::vector<std::pair<Element, Element>> relation() const;
  /// Labels form a bijection onto 1..p.
  bool is_proper() const;
  /// Same order, new labels (validated).
  LabeledPoset relabeled(std::vector<Label> labels) const;
  /// Labels sorted along one fixed linear extension; a tie-break key for equal labels.
  std::span<const int> rank() const { return rank_; }

  friend bool operator==(const LabeledPoset& a, const LabeledPoset& b) {
    return a.p_ == b.p_ && a.below_ == b.below_ && a.labels_ == b.labels_;
  }

 private:
  void validate_labels() const;

  int p_ = 0;
  std::vector<ElementMask> below_;
  std::vector<ElementMask> above_;
  std::vector<Label> labels_;
  std::vector<int> rank_;
};

/// Natural labels 1..p.
std::vector<Label> natural_labels(int p);

using ExtensionVisitor = std::function<void(std::span<const Element> order, std::span<const Label> word)>;

/// Visits every linear extension in lexicographic order of label words.
void for_each_linear_extension(const LabeledPoset& P, const ExtensionVisitor& visit);
std::vector<LinearExtension> linear_extensions(const LabeledPoset& P);
/// Count by dynamic programming over order ideals (independent of the visitor).
std::uint64_t count_linear_extensions(const LabeledPoset& P);

/// labels i -> p+1-labels(i). Throws ImproperLabeling.
LabeledPoset complement_labeling(const LabeledPoset& P);
LabelingKind classify_labeling(const LabeledPoset& P);
bool labelings_equivalent(const LabeledPoset& P, std::span<const Label> w1, std::span<const Label> w2);
/// Elements of B follow those of A. Throws LabelClash.
LabeledPoset disjoint_union(const LabeledPoset& A, const LabeledPoset& B);
/// Sorted by size, then lexicographically by member list.
std::vector<OrderIdeal> order_ideals(const LabeledPoset& P);
bool is_order_ideal(const LabeledPoset& P, ElementMask mask);
std::vector<std::vector<Element>> maximal_chains(const LabeledPoset& P);
/// Common edge count of all maximal chains, if there is one.
std::optional<int> graded_chain_length(const LabeledPoset& P);

/// Cells (row, column), 0-based, of the skew diagram outer/inner in row-major order.
std::vector<std::pair<int, int>> skew_cells(const Partition& outer, const Partition& inner);
/// Cell poset of outer/inner under the coordinatewise order, naturally labeled
/// in row-major order. Throws ShapeError.
LabeledPoset shape_to_poset(const Partition& outer, const Partition& inner);
/// Throws ShapeError unless both sequences are weakly decreasing, nonnegative,
/// of equal length, and inner <= outer.
void validate_shape(const Partition& outer, const Partition& inner);

}  // namespace ppart
