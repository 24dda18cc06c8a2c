#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ppart/multi_polynomial.hpp"
#include "ppart/poset.hpp"

namespace ppart {

/// A candidate (P,w)-partition: one nonnegative value per element.
using Assignment = std::vector<int>;

/// Default cap on the number of candidate maps an oracle may scan.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Order-reversing, with strict decrease across label descents.
bool is_ppartition(const LabeledPoset& P, std::span<const int> sigma);

/// sigma solves the chain inequalities of the element sequence `order`:
/// weakly decreasing, strictly where the label sequence descends.
bool satisfies_chain(const LabeledPoset& P, std::span<const Element> order, std::span<const int> sigma);

/// All (P,w)-partitions with largest part at most m, in lexicographic order.
/// Throws BudgetExceeded when p*(m+1)^p exceeds budget.
std::vector<Assignment> enumerate_ppartitions(const LabeledPoset& P, int m, std::uint64_t budget = kDefaultBudget);
void for_each_ppartition(const LabeledPoset& P, int m, const std::function<void(std::span<const int>)>& visit,
                         std::uint64_t budget = kDefaultBudget);

/// The unique linear extension whose chain inequalities sigma satisfies: sort
/// by weakly decreasing value, ties by increasing label. Throws InvalidAssignment.
LinearExtension canonical_extension(std::span<const int> sigma, const LabeledPoset& P);

struct KnuthPair {
  std::vector<int> values;        // weakly decreasing, positive
  std::vector<Element> elements;  // distinct
  friend bool operator==(const KnuthPair&, const KnuthPair&) = default;
};

/// Throws InvalidAssignment.
KnuthPair knuth_pair(std::span<const int> sigma, const LabeledPoset& P);
Assignment knuth_inverse(const KnuthPair& pair, const LabeledPoset& P);
/// Checks positivity, monotonicity and the two sequence conditions: every
/// predecessor of x_j occurs earlier, and a label drop from x_i to x_{i+1}
/// forces n_i > n_{i+1}.
bool knuth_conditions_hold(const KnuthPair& pair, const LabeledPoset& P);

/// Position of a signed value in -1 < +1 < -2 < +2 < ...
inline int enriched_key(int v) { return v > 0 ? 2 * v : -2 * v - 1; }

using EnrichedAssignment = std::vector<int>;

bool is_enriched_ppartition(const LabeledPoset& P, std::span<const int> sigma);
/// All maps into {-n..-1, 1..n} satisfying the enriched conditions.
/// Throws BudgetExceeded when (2n)^p exceeds budget.
std::vector<EnrichedAssignment> enumerate_enriched(const LabeledPoset& P, int n, std::uint64_t budget = kDefaultBudget);
void for_each_enriched(const LabeledPoset& P, int n, const std::function<void(std::span<const int>)>& visit,
                       std::uint64_t budget = kDefaultBudget);

/// Brute sum over (P,w)-partitions with values in 0..n_vars-1 of
/// prod x_{sigma(X)+1}.
MultiPolynomial ppartition_monomial_sum(const LabeledPoset& P, int n_vars, std::uint64_t budget = kDefaultBudget);

}  // namespace ppart
