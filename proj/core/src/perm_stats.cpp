#include "ppart/perm_stats.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ppart/errors.hpp"

namespace ppart {

DescentStats descent_statistics(std::span<const int> word) {
  DescentStats out;
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    if (word[j] > word[j + 1]) {
      const int pos = static_cast<int>(j) + 1;
      out.set.push_back(pos);
      out.maj += pos;
    }
  }
  out.des = static_cast<int>(out.set.size());
  return out;
}

std::uint64_t descent_mask(std::span<const int> word) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (word[j] > word[j + 1]) m |= std::uint64_t{1} << j;
  return m;
}

std::vector<int> peak_set(std::span<const int> word) {
  std::set<int> letters(word.begin(), word.end());
  if (letters.size() != word.size()) throw DuplicateLetters("peak_set requires distinct letters");
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < word.size(); ++i)
    if (word[i - 1] < word[i] && word[i] > word[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> signed_descent_set(std::span<const int> values) {
  const int p = static_cast<int>(values.size());
  // Rank in 1 < ... < p+1 < -p < ... < -1.
  auto key = [p](int v) { return v > 0 ? v : 2 * p + 2 + v; };
  std::vector<int> out;
  for (int i = 0; i < p; ++i) {
    const int next = i + 1 < p ? values[static_cast<std::size_t>(i + 1)] : p + 1;
    if (key(values[static_cast<std::size_t>(i)]) > key(next)) out.push_back(i + 1);
  }
  return out;
}

bool is_lattice_permutation(std::span<const int> word) {
  std::map<int, int> count;
  for (int letter : word) {
    if (letter < 1) return false;
    const int c = ++count[letter];
    if (letter > 1 && c > count[letter - 1]) return false;
  }
  return true;
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int v = perm[i];
    if (v < 1 || v > static_cast<int>(perm.size())) throw std::invalid_argument("not a permutation");
    inv[static_cast<std::size_t>(v - 1)] = static_cast<int>(i) + 1;
  }
  return inv;
}

}  // namespace ppart
