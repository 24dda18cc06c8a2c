#include "ppart/bipolynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ppart/render.hpp"

namespace ppart {

BiPolynomial BiPolynomial::term(const Integer& c, int t_exp, int q_exp) {
  BiPolynomial out;
  out.add_term(t_exp, q_exp, c);
  return out;
}

BiPolynomial BiPolynomial::from_q(const IntPolynomial& f) {
  BiPolynomial out;
  for (int d = 0; d <= f.degree(); ++d) out.add_term(0, d, f.coeff(d));
  return out;
}

BiPolynomial BiPolynomial::from_t(const IntPolynomial& f) {
  BiPolynomial out;
  for (int d = 0; d <= f.degree(); ++d) out.add_term(d, 0, f.coeff(d));
  return out;
}

void BiPolynomial::add_term(int t_exp, int q_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{t_exp, q_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPolynomial::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find(Exponent{t_exp, q_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

bool BiPolynomial::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.t >= 0 && kv.first.q >= 0; });
}

int BiPolynomial::max_t() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.t);
  return m;
}

int BiPolynomial::min_q() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.q);
  return m;
}

int BiPolynomial::max_q() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.q);
  return m;
}

Integer BiPolynomial::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

BiPolynomial BiPolynomial::shifted(int dt, int dq) const {
  BiPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponent{e.t + dt, e.q + dq}, c);
  return out;
}

BiPolynomial BiPolynomial::q_inverted() const {
  BiPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.t, -e.q}, c);
  return out;
}

BiPolynomial BiPolynomial::t_slice(int s) const {
  BiPolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.t == s) out.terms_.emplace(Exponent{0, e.q}, c);
  return out;
}

IntPolynomial BiPolynomial::at_q_one() const {
  std::vector<Integer> v;
  for (const auto& [e, c] : terms_) {
    if (e.t < 0) throw std::domain_error("at_q_one: negative t exponent");
    if (static_cast<int>(v.size()) <= e.t) v.resize(static_cast<std::size_t>(e.t) + 1);
    v[static_cast<std::size_t>(e.t)] += c;
  }
  return IntPolynomial(std::move(v));
}

BiPolynomial BiPolynomial::at_t_one() const {
  BiPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(0, e.q, c);
  return out;
}

std::optional<IntPolynomial> BiPolynomial::as_q_polynomial() const {
  std::vector<Integer> v;
  for (const auto& [e, c] : terms_) {
    if (e.t != 0 || e.q < 0) return std::nullopt;
    if (static_cast<int>(v.size()) <= e.q) v.resize(static_cast<std::size_t>(e.q) + 1);
    v[static_cast<std::size_t>(e.q)] = c;
  }
  return IntPolynomial(std::move(v));
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.t, e.q, c);
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.t, e.q, -c);
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
  BiPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.t + eb.t, ea.q + eb.q, ca * cb);
  return out;
}

BiPolynomial BiPolynomial::operator-() const {
  BiPolynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

std::string BiPolynomial::to_string(std::string_view t_var, std::string_view q_var) const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponent, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.t + a.first.q;
    const int db = b.first.t + b.first.q;
    if (da != db) return da < db;
    return a.first.t > b.first.t;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    Integer mag = abs(c);
    render::append_term(out, c < 0, mag.get_str(),
                        render::monomial({{std::string(t_var), e.t}, {std::string(q_var), e.q}}));
  }
  return out;
}

}  // namespace ppart
