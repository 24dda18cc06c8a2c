#include "ppart/rational_polynomial.hpp"

#include <set>
#include <stdexcept>

#include "ppart/errors.hpp"
#include "ppart/render.hpp"

namespace ppart {

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial::RationalPolynomial(const IntPolynomial& f) {
  for (const auto& c : f.coefficients()) coeffs_.emplace_back(c);
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear(const Rational& c) { return RationalPolynomial({c, Rational(1)}); }

void RationalPolynomial::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::reflected() const {
  RationalPolynomial out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
  // Horner in the ring: p(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  RationalPolynomial out;
  const RationalPolynomial step = linear(c);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= step;
    out += constant(*it);
  }
  return out;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

bool RationalPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    render::append_term(out, c < 0, ppart::to_string(mag),
                        render::monomial({{std::string(var), static_cast<int>(i)}}));
  }
  return out;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalPolynomial rem = a;
  std::vector<Rational> quot(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / b.leading();
    quot[static_cast<std::size_t>(shift)] = factor;
    rem -= b * RationalPolynomial::monomial(factor, shift);
  }
  return {RationalPolynomial(std::move(quot)), rem};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial interpolate(std::span<const InterpolationPoint> points) {
  std::set<Integer> seen;
  for (const auto& pt : points)
    if (!seen.insert(pt.argument).second)
      throw DuplicateArgument("interpolate: repeated argument " + pt.argument.get_str());

  RationalPolynomial out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RationalPolynomial basis = RationalPolynomial::constant(points[i].value);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const Rational denom = Rational(points[i].argument - points[j].argument);
      basis *= RationalPolynomial::linear(Rational(-points[j].argument));
      basis *= Rational(1 / denom);
    }
    out += basis;
  }
  return out;
}

}  // namespace ppart
