#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ppart {

/// Descent data of a word; positions are 1-based.
struct DescentStats {
  std::vector<int> set;
  int des = 0;
  long maj = 0;
  friend bool operator==(const DescentStats&, const DescentStats&) = default;
};

/// Descents j with w(j) > w(j+1); over a multiset alphabet maj is MacMahon's
/// greater index.
DescentStats descent_statistics(std::span<const int> word);

/// Descent set packed as a bitmask: bit (j-1) for descent position j.
std::uint64_t descent_mask(std::span<const int> word);

/// Interior positions i with w(i-1) < w(i) > w(i+1). Throws DuplicateLetters.
std::vector<int> peak_set(std::span<const int> word);

/// Type-B descent set of a signed permutation, using pi(p+1) = p+1 and the
/// order 1 < 2 < ... < p+1 < -p < ... < -1.
std::vector<int> signed_descent_set(std::span<const int> values);

/// Every prefix has at least as many k's as (k+1)'s, for every letter k >= 1.
bool is_lattice_permutation(std::span<const int> word);

/// Inverse of a permutation of 1..p given in one-line notation.
std::vector<int> inverse_permutation(std::span<const int> perm);

}  // namespace ppart
