#include "ppart/qsym.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ppart/errors.hpp"
#include "ppart/perm_stats.hpp"

namespace ppart {

Composition composition_from_set(const std::vector<int>& set, int p) {
  std::vector<int> cuts = set;
  std::sort(cuts.begin(), cuts.end());
  Composition out;
  int prev = 0;
  for (int c : cuts) {
    if (c <= prev || c >= p) throw std::invalid_argument("composition_from_set: bad subset");
    out.push_back(c - prev);
    prev = c;
  }
  if (p > 0) out.push_back(p - prev);
  return out;
}

std::vector<int> set_from_composition(const Composition& alpha) {
  std::vector<int> out;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    sum += alpha[i];
    out.push_back(sum);
  }
  return out;
}

std::vector<Composition> compositions(int p) {
  std::vector<Composition> out;
  if (p == 0) return {Composition{}};
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (p - 1)); ++m) {
    std::vector<int> set;
    for (int j = 1; j < p; ++j)
      if ((m >> (j - 1)) & 1U) set.push_back(j);
    out.push_back(composition_from_set(set, p));
  }
  return out;
}

MonomialExpansion fundamental_expand(const Composition& alpha, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("fundamental_expand: n_vars must be positive");
  int p = 0;
  for (int a : alpha) {
    if (a <= 0) throw std::invalid_argument("composition parts must be positive");
    p += a;
  }
  std::vector<bool> strict(static_cast<std::size_t>(p) + 1, false);
  for (int s : set_from_composition(alpha)) strict[static_cast<std::size_t>(s)] = true;

  MonomialExpansion out(n_vars);
  std::vector<int> exps(static_cast<std::size_t>(n_vars), 0);
  std::function<void(int, int)> rec = [&](int pos, int last) {
    if (pos > p) {
      out.add_term(exps, 1);
      return;
    }
    const int lo = pos == 1 ? 1 : (strict[static_cast<std::size_t>(pos - 1)] ? last + 1 : last);
    for (int i = lo; i <= n_vars; ++i) {
      ++exps[static_cast<std::size_t>(i - 1)];
      rec(pos + 1, i);
      --exps[static_cast<std::size_t>(i - 1)];
    }
  };
  rec(1, 1);
  return out;
}

void QsymElement::add(const Composition& alpha, const Integer& c) {
  Integer& slot = coeffs[alpha];
  slot += c;
  if (slot == 0) coeffs.erase(alpha);
}

MonomialExpansion QsymElement::expand(int n_vars) const {
  MonomialExpansion out(n_vars);
  if (degree == 0) {
    auto it = coeffs.find(Composition{});
    if (it != coeffs.end()) out.add_term(std::vector<int>(static_cast<std::size_t>(n_vars), 0), it->second);
    return out;
  }
  for (const auto& [alpha, c] : coeffs) out += fundamental_expand(alpha, n_vars) * c;
  return out;
}

std::string QsymElement::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : coeffs) {
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const Integer mag = neg ? Integer(-c) : c;
    if (mag != 1) os << mag.get_str() << '*';
    os << "F_{(";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << ")}";
  }
  return os.str();
}

QsymElement gamma(const LabeledPoset& P) {
  QsymElement out;
  const int p = P.size();
  out.degree = p;
  for_each_linear_extension(P, [&](std::span<const Element>, std::span<const Label> word) {
    std::vector<int> reversed;
    for (int j : descent_statistics(word).set) reversed.push_back(p - j);
    out.add(composition_from_set(reversed, p), 1);
  });
  return out;
}

namespace {

MonomialExpansion enriched_sum(const LabeledPoset& P, int n_vars, std::uint64_t budget) {
  MonomialExpansion out(n_vars);
  std::vector<int> exps(static_cast<std::size_t>(n_vars));
  for_each_enriched(
      P, n_vars,
      [&](std::span<const int> sigma) {
        std::fill(exps.begin(), exps.end(), 0);
        for (int v : sigma) ++exps[static_cast<std::size_t>(std::abs(v) - 1)];
        out.add_term(exps, 1);
      },
      budget);
  return out;
}

}  // namespace

MonomialExpansion delta(const LabeledPoset& P, int n_vars, std::uint64_t budget) {
  if (n_vars < 1) throw std::invalid_argument("delta: n_vars must be positive");
  return enriched_sum(P, n_vars, budget);
}

MonomialExpansion delta_by_extensions(const LabeledPoset& P, int n_vars, std::uint64_t budget) {
  if (n_vars < 1) throw std::invalid_argument("delta: n_vars must be positive");
  MonomialExpansion out(n_vars);
  for (const auto& ext : linear_extensions(P))
    out += enriched_sum(LabeledPoset::chain(ext.word), n_vars, budget);
  return out;
}

std::vector<int> enriched_peak_set(std::span<const int> word) {
  const int p = static_cast<int>(word.size());
  std::vector<int> complement;
  complement.reserve(word.size());
  for (int v : word) complement.push_back(p + 1 - v);
  return peak_set(complement);
}

namespace {

template <class T>
std::vector<T> apply_op(BaxterOp op, const std::vector<T>& a, const T& zero) {
  return op == BaxterOp::S ? baxter_s(a, zero) : baxter_p(a, zero);
}

}  // namespace

bool baxter_identity_holds(BaxterOp op, const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const Rational& theta) {
  const Rational zero = 0;
  auto B = [&](const std::vector<Rational>& v) { return apply_op(op, v, zero); };
  std::vector<Rational> lhs = B(hadamard(a, B(b)));
  const std::vector<Rational> lhs2 = B(hadamard(b, B(a)));
  std::vector<Rational> ab = hadamard(a, b);
  for (auto& v : ab) v *= theta;
  std::vector<Rational> rhs = hadamard(B(a), B(b));
  const std::vector<Rational> rhs2 = B(ab);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    lhs[i] += lhs2[i];
    rhs[i] += rhs2[i];
  }
  return lhs == rhs;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view word, int n_vars) : n_(n_vars) {
    for (char c : word)
      if (c != ' ' && c != '\t') text_.push_back(c);
  }

  std::vector<MultiPolynomial> parse() {
    std::vector<MultiPolynomial> v = expr();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  // expr := 'x' | 'x' ('S'|'P') '(' expr ')'
  std::vector<MultiPolynomial> expr() {
    if (!eat('x')) fail("expected 'x'");
    std::vector<MultiPolynomial> x;
    for (int r = 1; r <= n_; ++r) x.push_back(MultiPolynomial::variable(n_, r));
    if (pos_ == text_.size() || text_[pos_] == ')') return x;
    const char op = text_[pos_];
    if (op != 'S' && op != 'P') fail("expected 'S' or 'P'");
    ++pos_;
    if (!eat('(')) fail("expected '('");
    std::vector<MultiPolynomial> inner = expr();
    if (!eat(')')) fail("expected ')'");
    const MultiPolynomial zero(n_);
    return hadamard(x, apply_op(op == 'S' ? BaxterOp::S : BaxterOp::P, inner, zero));
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedWord("operator word '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }

  int n_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialExpansion baxter_apply(std::string_view word, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("baxter_apply: n_vars must be positive");
  MonomialExpansion total(n_vars);
  for (const auto& entry : WordParser(word, n_vars).parse()) total += entry;
  return total;
}

}  // namespace ppart
