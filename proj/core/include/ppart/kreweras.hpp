#pragma once

#include <utility>
#include <vector>

#include "ppart/arith.hpp"
#include "ppart/poset.hpp"
#include "ppart/report.hpp"

namespace ppart {

inline constexpr int kMaxKrewerasCells = 12;

/// Row (0-based) holding each entry 1..m of every standard skew tableau of
/// outer/inner, one sequence per tableau.
std::vector<std::vector<int>> tableau_row_sequences(const Partition& outer, const Partition& inner);
/// Entries i whose successor sits in a strictly higher row.
int count_returns(const std::vector<int>& rows);

/// theta_r = number of standard tableaux with r returns. Throws SizeLimit.
std::vector<Integer> kreweras_theta(const Partition& outer, const Partition& inner);
/// det C(y_i - y'_j + r, i - j + r), with C(n,k) = 0 unless 0 <= k <= n.
Integer kreweras_w_det(const Partition& outer, const Partition& inner, int r);
/// Number of multichains inner <= Z_1 <= ... <= Z_r <= outer.
Integer kreweras_w_brute(const Partition& outer, const Partition& inner, int r);

struct KrewerasResult {
  std::vector<Integer> theta;
  std::vector<Integer> w;  // w_0..w_{t_max}
  Report report;
};

KrewerasResult kreweras(const Partition& outer, const Partition& inner, int t_max);

/// Skew shape whose i-th row has parts[i] cells and shares no column with the
/// other rows; its tableaux are the permutations of a multiset.
std::pair<Partition, Partition> staircase_shape(const std::vector<int>& parts);

/// Determinant of a square integer matrix, fraction-free elimination.
Integer integer_determinant(std::vector<std::vector<Integer>> a);

}  // namespace ppart
