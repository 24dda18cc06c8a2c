#include "ppart/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ppart/errors.hpp"

namespace ppart {

BiPolynomial QFactor::expanded() const {
  BiPolynomial out = BiPolynomial::one();
  out.add_term(t_exp, q_exp, -1);
  return out;
}

std::string QFactor::to_string() const {
  std::string m;
  if (t_exp == 1) m = "t";
  if (q_exp != 0) {
    if (!m.empty()) m += '*';
    m += "q";
    if (q_exp != 1) m += '^' + std::to_string(q_exp);
  }
  if (m.empty()) m = "1";
  return "(1-" + m + ")";
}

QRational::QRational(BiPolynomial numerator, std::vector<QFactor> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (const auto& f : denominator_) {
    if (f.t_exp != 0 && f.t_exp != 1) throw std::invalid_argument("QFactor: t exponent must be 0 or 1");
    if (f.t_exp == 0 && f.q_exp == 0) throw std::invalid_argument("QFactor: (1-1) is zero");
  }
  std::sort(denominator_.begin(), denominator_.end());
}

namespace {

// Exact quotient of n by (1 - t^e q^a), graded by the variable the factor moves.
std::optional<BiPolynomial> divide_exact(const BiPolynomial& n, const QFactor& f) {
  if (n.is_zero()) return n;
  const bool by_t = f.t_exp != 0;
  int step = by_t ? 1 : f.q_exp;
  bool flip = false;
  QFactor g = f;
  BiPolynomial num = n;
  if (!by_t && step < 0) {
    // 1 - q^-a = -q^-a (1 - q^a)
    step = -step;
    flip = true;
    g.q_exp = step;
  }
  std::map<int, BiPolynomial> slices;
  for (const auto& [e, c] : num.terms()) slices[by_t ? e.t : e.q].add_term(e.t, e.q, c);
  const int lo = slices.begin()->first;
  const int hi = slices.rbegin()->first;

  std::map<int, BiPolynomial> quot;
  for (int grade = lo; grade <= hi; ++grade) {
    BiPolynomial cur;
    if (auto it = slices.find(grade); it != slices.end()) cur = it->second;
    if (auto it = quot.find(grade - step); it != quot.end()) cur += it->second.shifted(g.t_exp, g.q_exp);
    if (grade <= hi - step) {
      if (!cur.is_zero()) quot.emplace(grade, std::move(cur));
    } else if (!cur.is_zero()) {
      return std::nullopt;
    }
  }
  BiPolynomial out;
  for (auto& [grade, s] : quot) out += s;
  if (flip) out = (-out).shifted(0, step);
  return out;
}

}  // namespace

std::optional<BiPolynomial> QRational::reduce() const {
  BiPolynomial cur = numerator_;
  for (const auto& f : denominator_) {
    auto next = divide_exact(cur, f);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

QRational QRational::q_inverted() const {
  BiPolynomial num = numerator_.q_inverted();
  for (const auto& f : denominator_) {
    if (f.t_exp != 0) throw std::domain_error("q_inverted: denominator contains t");
    // 1 / (1 - q^-a) = -q^a / (1 - q^a)
    num = (-num).shifted(0, f.q_exp);
  }
  return QRational(std::move(num), denominator_);
}

QRational QRational::at_q_one() const {
  std::vector<QFactor> den;
  for (const auto& f : denominator_) {
    if (f.t_exp == 0) throw std::domain_error("at_q_one: factor (1-q^a) vanishes at q=1");
    den.push_back({1, 0});
  }
  return QRational(BiPolynomial::from_t(numerator_.at_q_one()), std::move(den));
}

QRational operator*(const QRational& a, const QRational& b) {
  std::vector<QFactor> den = a.denominator_;
  den.insert(den.end(), b.denominator_.begin(), b.denominator_.end());
  return QRational(a.numerator_ * b.numerator_, std::move(den));
}

QRational operator*(const QRational& a, const BiPolynomial& b) { return QRational(a.numerator_ * b, a.denominator_); }

bool QRational::same_function(const QRational& other) const {
  BiPolynomial lhs = numerator_;
  for (const auto& f : other.denominator_) lhs = lhs * f.expanded();
  BiPolynomial rhs = other.numerator_;
  for (const auto& f : denominator_) rhs = rhs * f.expanded();
  return lhs == rhs;
}

std::string QRational::to_string() const {
  std::string num = numerator_.to_string();
  if (denominator_.empty()) return num;
  if (numerator_.size() > 1) num = "(" + num + ")";
  std::string den;
  for (const auto& f : denominator_) {
    if (!den.empty()) den += '*';
    den += f.to_string();
  }
  if (denominator_.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

std::vector<QFactor> q_pochhammer(int t_exp, int shift, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  std::vector<QFactor> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back({t_exp, shift + i});
  return out;
}

QRational q_binomial(long n, int k) {
  if (k < 0) return QRational();
  BiPolynomial num = BiPolynomial::one();
  for (int i = 0; i < k; ++i) {
    const long e = n - i;
    if (e == 0) return QRational(BiPolynomial(), q_pochhammer(0, 1, k));
    BiPolynomial factor = BiPolynomial::one();
    factor.add_term(0, static_cast<int>(e), -1);
    num = num * factor;
  }
  return QRational(std::move(num), q_pochhammer(0, 1, k));
}

BiPolynomial q_binomial_laurent(long n, int k) {
  auto r = q_binomial(n, k).reduce();
  if (!r) throw std::logic_error("q-binomial did not reduce");
  return *r;
}

IntPolynomial gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  // row[j] = [i choose j]_q, updated in place from high j to low.
  std::vector<IntPolynomial> row(static_cast<std::size_t>(k) + 1);
  row[0] = IntPolynomial{1};
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      // [i, j] = [i-1, j-1] + q^j [i-1, j]
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)] * IntPolynomial::monomial(1, j);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

IntPolynomial q_integer(int n) {
  std::vector<Integer> v(static_cast<std::size_t>(std::max(n, 0)), Integer(1));
  return IntPolynomial(std::move(v));
}

SeriesTable::SeriesTable(int t_max, int q_max)
    : t_max_(t_max), q_max_(q_max),
      data_(static_cast<std::size_t>(t_max + 1) * static_cast<std::size_t>(q_max + 1)) {
  if (t_max < 0 || q_max < 0) throw std::invalid_argument("SeriesTable: negative bound");
}

std::size_t SeriesTable::index(int i, int j) const {
  if (i < 0 || j < 0 || i > t_max_ || j > q_max_) throw std::out_of_range("SeriesTable index");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(q_max_ + 1) + static_cast<std::size_t>(j);
}

IntPolynomial SeriesTable::t_row(int i) const {
  std::vector<Integer> v;
  v.reserve(static_cast<std::size_t>(q_max_) + 1);
  for (int j = 0; j <= q_max_; ++j) v.push_back(at(i, j));
  return IntPolynomial(std::move(v));
}

SeriesTable series_of(const BiPolynomial& f, int t_max, int q_max) {
  if (!f.is_polynomial()) throw std::domain_error("series: numerator has negative exponents");
  SeriesTable out(t_max, q_max);
  for (const auto& [e, c] : f.terms())
    if (e.t <= t_max && e.q <= q_max) out.at(e.t, e.q) += c;
  return out;
}

SeriesTable series_coefficients(const QRational& f, int t_max, int q_max) {
  SeriesTable g = series_of(f.numerator(), t_max, q_max);
  for (const auto& fac : f.denominator()) {
    const int a = fac.q_exp;
    if (a < 0) throw std::domain_error("series: factor with negative q exponent");
    if (fac.t_exp == 1) {
      // G = F + t q^a G
      for (int i = 1; i <= t_max; ++i)
        for (int j = a; j <= q_max; ++j) g.at(i, j) += g.at(i - 1, j - a);
    } else {
      // G = F + q^a G
      for (int i = 0; i <= t_max; ++i)
        for (int j = a; j <= q_max; ++j) g.at(i, j) += g.at(i, j - a);
    }
  }
  return g;
}

}  // namespace ppart
