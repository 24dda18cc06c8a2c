#include "ppart/multi_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ppart/render.hpp"

namespace ppart {

MultiPolynomial MultiPolynomial::constant(int n_vars, const Integer& c) {
  MultiPolynomial out(n_vars);
  out.add_term(Exponents(static_cast<std::size_t>(n_vars), 0), c);
  return out;
}

MultiPolynomial MultiPolynomial::variable(int n_vars, int index) {
  if (index < 1 || index > n_vars) throw std::out_of_range("MultiPolynomial::variable");
  Exponents e(static_cast<std::size_t>(n_vars), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  MultiPolynomial out(n_vars);
  out.add_term(e, 1);
  return out;
}

Integer MultiPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n_vars_) throw std::invalid_argument("MultiPolynomial: exponent arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPolynomial::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg == -1) deg = d;
    else if (deg != d) return -1;
  }
  return deg;
}

void MultiPolynomial::check_arity(const MultiPolynomial& o) const {
  if (o.n_vars_ != n_vars_) throw std::invalid_argument("MultiPolynomial: variable count mismatch");
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  a.check_arity(b);
  MultiPolynomial out(a.n_vars_);
  MultiPolynomial::Exponents e(static_cast<std::size_t>(a.n_vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MultiPolynomial::to_string(std::string_view prefix) const {
  if (is_zero()) return "0";
  std::string out;
  // Map order is lexicographic on exponents; render graded, then reverse-lex so
  // x1-heavy monomials come first.
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : sorted) {
    std::vector<std::pair<std::string, int>> powers;
    for (std::size_t i = 0; i < e.size(); ++i) powers.emplace_back(std::string(prefix) + std::to_string(i + 1), e[i]);
    Integer mag = abs(c);
    render::append_term(out, c < 0, mag.get_str(), render::monomial(powers));
  }
  return out;
}

}  // namespace ppart
