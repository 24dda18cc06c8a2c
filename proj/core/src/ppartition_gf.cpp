#include "ppart/ppartition_gf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "ppart/errors.hpp"
#include "ppart/perm_stats.hpp"

namespace ppart {

IntPolynomial DescentGF::w(int s) const {
  auto slice = poly.t_slice(s).as_q_polynomial();
  return slice ? *slice : IntPolynomial();
}

DescentGF descent_gf(const LabeledPoset& P) {
  // Accumulate counts per (des, maj) before touching big integers.
  std::map<Exponent, std::uint64_t> counts;
  for_each_linear_extension(P, [&](std::span<const Element>, std::span<const Label> word) {
    const DescentStats st = descent_statistics(word);
    ++counts[Exponent{st.des, static_cast<int>(st.maj)}];
  });
  DescentGF out;
  out.p = P.size();
  for (const auto& [e, n] : counts) out.poly.add_term(e.t, e.q, Integer(static_cast<unsigned long>(n)));
  return out;
}

BiPolynomial u_m_laurent(const LabeledPoset& P, long m) {
  const DescentGF gf = descent_gf(P);
  const int p = P.size();
  BiPolynomial out;
  for (const auto& [e, c] : gf.poly.terms()) {
    BiPolynomial term = q_binomial_laurent(p + m - e.t, p).shifted(0, e.q);
    out += term * c;
  }
  return out;
}

IntPolynomial u_m(const LabeledPoset& P, int m) {
  if (m < 0) throw std::invalid_argument("u_m: m must be nonnegative");
  const DescentGF gf = descent_gf(P);
  const int p = P.size();
  IntPolynomial out;
  for (const auto& [e, c] : gf.poly.terms())
    out += gaussian_binomial(p + m - e.t, p) * IntPolynomial::monomial(c, e.q);
  return out;
}

QRational u_gf(const LabeledPoset& P) {
  const DescentGF gf = descent_gf(P);
  return QRational(gf.poly.at_t_one(), q_pochhammer(0, 1, P.size()));
}

QRational u_m_series(const LabeledPoset& P) {
  return QRational(descent_gf(P).poly, q_pochhammer(1, 0, P.size() + 1));
}

QRational order_series(const LabeledPoset& P) {
  const IntPolynomial w = descent_gf(P).w_polynomial();
  return QRational(BiPolynomial::from_t(w * IntPolynomial{0, 1}),
                   std::vector<QFactor>(static_cast<std::size_t>(P.size()) + 1, QFactor{1, 0}));
}

RationalPolynomial order_polynomial(const LabeledPoset& P) {
  const IntPolynomial w = descent_gf(P).w_polynomial();
  const int p = P.size();
  const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned long>(p)));
  RationalPolynomial out;
  for (int s = 0; s <= w.degree(); ++s) {
    if (w.coeff(s) == 0) continue;
    // C(m - 1 - s + p, p) = prod_{i<p} (m + p - 1 - s - i) / p!
    RationalPolynomial b = RationalPolynomial::constant(inv_fact);
    for (int i = 0; i < p; ++i) b *= RationalPolynomial::linear(Rational(p - 1 - s - i));
    out += b * Rational(w.coeff(s));
  }
  return out;
}

bool AlphaBetaTable::inclusion_exclusion_holds() const {
  for (const auto& e : entries) {
    Integer beta = 0;
    // Subsets T of S.
    const std::uint64_t S = e.set_mask;
    for (std::uint64_t T = S;; T = (T - 1) & S) {
      const int sign = (std::popcount(S) - std::popcount(T)) % 2 == 0 ? 1 : -1;
      beta += entries[T].alpha * sign;
      if (T == 0) break;
    }
    if (beta != e.beta) return false;
  }
  return true;
}

AlphaBetaTable alpha_beta(const LabeledPoset& P) {
  AlphaBetaTable table;
  table.p = P.size();
  const int positions = std::max(P.size() - 1, 0);
  if (positions > 20) throw SizeLimit("alpha_beta: too many descent positions");
  const std::uint64_t n_sets = std::uint64_t{1} << positions;
  std::vector<std::uint64_t> beta(n_sets, 0);
  for_each_linear_extension(P, [&](std::span<const Element>, std::span<const Label> word) { ++beta[descent_mask(word)]; });
  table.entries.resize(n_sets);
  for (std::uint64_t S = 0; S < n_sets; ++S) {
    table.entries[S].set_mask = S;
    table.entries[S].beta = Integer(static_cast<unsigned long>(beta[S]));
  }
  for (std::uint64_t S = 0; S < n_sets; ++S) {
    Integer a = 0;
    for (std::uint64_t T = S;; T = (T - 1) & S) {
      a += table.entries[T].beta;
      if (T == 0) break;
    }
    table.entries[S].alpha = a;
  }
  return table;
}

Integer alpha_from_ideal_chains(const LabeledPoset& P, std::uint64_t set_mask) {
  const int p = P.size();
  std::vector<int> sizes{0};
  for (int j = 1; j < p; ++j)
    if ((set_mask >> (j - 1)) & 1U) sizes.push_back(j);
  sizes.push_back(p);
  const auto ideals = order_ideals(P);

  // Restriction of labels to `block` never descends along the order.
  auto compatible = [&](ElementMask block) {
    for (int x = 0; x < p; ++x) {
      if (!((block >> x) & 1U)) continue;
      for (int y = 0; y < p; ++y)
        if (((block >> y) & 1U) && P.less(x, y) && P.label(x) > P.label(y)) return false;
    }
    return true;
  };

  std::map<ElementMask, Integer> ways{{0, 1}};
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    std::map<ElementMask, Integer> next;
    for (const auto& I : ideals) {
      if (std::popcount(I.mask) != sizes[k]) continue;
      Integer total = 0;
      for (const auto& [prev, n] : ways)
        if ((prev & ~I.mask) == 0 && compatible(I.mask & ~prev)) total += n;
      if (total != 0) next.emplace(I.mask, total);
    }
    ways = std::move(next);
  }
  Integer out = 0;
  for (const auto& [m, n] : ways) out += n;
  return out;
}

bool descent_count_symmetric(const LabeledPoset& P, int n, int l) {
  const IntPolynomial w = descent_gf(P).w_polynomial();
  for (int s = 0; s <= std::max(w.degree(), 0); ++s) {
    const int mirror = n - l - s;
    if (w.coeff(s) != (mirror >= 0 ? w.coeff(mirror) : Integer(0))) return false;
  }
  return true;
}

Report reciprocity_check(const LabeledPoset& P, int m_max) {
  Report report;
  const int p = P.size();
  const int sign = p % 2 == 0 ? 1 : -1;
  const LabeledPoset Pc = complement_labeling(P);

  // (a) order polynomial reciprocity.
  const RationalPolynomial omega = order_polynomial(P);
  const RationalPolynomial omega_c = order_polynomial(Pc);
  report.add("order polynomial reciprocity", omega_c == omega.reflected() * Rational(sign),
             "Omega(P,wbar;m) = " + omega_c.to_string() + ", (-1)^p Omega(P,w;-m) = " +
                 (omega.reflected() * Rational(sign)).to_string());

  // (b) bounded reciprocity, including U_{-1} = 0 for nonempty P.
  {
    bool ok = p == 0 || u_m_laurent(P, -1).is_zero();
    std::string detail = ok ? "" : "U_{-1}(P,w) != 0";
    for (int m = 0; m <= m_max && ok; ++m) {
      const BiPolynomial lhs = BiPolynomial::from_q(u_m(Pc, m)).shifted(0, p);
      const BiPolynomial rhs = u_m_laurent(P, -(m + 2)).q_inverted() * Integer(sign);
      if (lhs != rhs) {
        ok = false;
        detail = "fails at m=" + std::to_string(m) + ": " + lhs.to_string() + " vs " + rhs.to_string();
      }
    }
    report.add("bounded U_m reciprocity", ok, detail);
  }

  // (c) unbounded reciprocity as rational functions.
  {
    const QRational lhs = u_gf(Pc) * BiPolynomial::term(1, 0, p);
    const QRational rhs = u_gf(P).q_inverted() * BiPolynomial::term(sign, 0, 0);
    report.add("U reciprocity", lhs.same_function(rhs), lhs.to_string() + " vs " + rhs.to_string());
  }

  // (d) chain-condition symmetry for naturally labeled graded posets.
  if (classify_labeling(P) == LabelingKind::natural && p > 0) {
    if (auto l = graded_chain_length(P)) {
      const int len = *l;
      bool ok = true;
      for (int m = -6; m <= 6 && ok; ++m) {
        const Rational a = omega.evaluate(Rational(m));
        ok = a == omega.evaluate(Rational(-len - m)) * sign && a == omega_c.evaluate(Rational(len + m));
      }
      report.add("chain condition order polynomial symmetry", ok);
      // Two readings of n; the check passes when one holds and names it.
      std::string detail;
      bool any = false;
      for (const auto& [n, name] : {std::pair{p, "n=p"}, std::pair{p - 1, "n=p-1"}}) {
        const bool holds = descent_count_symmetric(P, n, len);
        any = any || holds;
        detail += std::string(detail.empty() ? "" : ", ") + name + (holds ? " holds" : " fails");
      }
      report.add("chain condition descent symmetry", any, detail);
    }
  }
  return report;
}

IntPolynomial shuffle_w(const LabeledPoset& P, const LabeledPoset& Q, int s) {
  const DescentGF gp = descent_gf(P);
  const DescentGF gq = descent_gf(Q);
  const int a = P.size();
  const int b = Q.size();
  IntPolynomial out;
  for (int i = 0; i <= std::max(a - 1, 0); ++i) {
    const IntPolynomial wi = gp.w(i);
    if (wi.is_zero()) continue;
    for (int j = 0; j <= std::max(b - 1, 0); ++j) {
      const IntPolynomial wj = gq.w(j);
      if (wj.is_zero() || s < i || s < j) continue;
      out += IntPolynomial::monomial(1, (s - i) * (s - j)) * gaussian_binomial(a + j - i, s - i) *
             gaussian_binomial(b + i - j, s - j) * wi * wj;
    }
  }
  return out;
}

Report shuffle_identity(const LabeledPoset& P, const LabeledPoset& Q_in) {
  // Descent statistics only see relative order, so lift Q's labels clear of P's.
  const Label top = P.size() == 0 ? 0 : *std::max_element(P.labels().begin(), P.labels().end());
  std::vector<Label> lifted(Q_in.labels().begin(), Q_in.labels().end());
  for (Label& l : lifted) l += top;
  const LabeledPoset Q = Q_in.relabeled(std::move(lifted));
  Report report;
  const DescentGF whole = descent_gf(disjoint_union(P, Q));
  const int n = P.size() + Q.size();
  for (int s = 0; s <= std::max(n - 1, 0); ++s) {
    const IntPolynomial lhs = whole.w(s);
    const IntPolynomial rhs = shuffle_w(P, Q, s);
    report.add("W_" + std::to_string(s), lhs == rhs, lhs.to_string("q") + " vs " + rhs.to_string("q"));
  }
  return report;
}

LabeledPoset multiset_poset(std::span<const int> parts) {
  LabeledPoset out = LabeledPoset::antichain({});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("multiset parts must be positive");
    out = disjoint_union(out, LabeledPoset::chain(std::vector<Label>(static_cast<std::size_t>(parts[i]), static_cast<int>(i) + 1)));
  }
  return out;
}

MacMahonResult macmahon_multiset(std::span<const int> parts, int t_max) {
  const int p = std::accumulate(parts.begin(), parts.end(), 0);
  if (p > 10) throw SizeLimit("macmahon_multiset: parts sum to more than 10");
  MacMahonResult out;
  out.A = descent_gf(multiset_poset(parts)).poly;

  const int q_max = t_max * p + std::max(out.A.is_zero() ? 0 : out.A.max_q(), 0);
  const SeriesTable rhs = series_coefficients(QRational(out.A, q_pochhammer(1, 0, p + 1)), t_max, q_max);
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= t_max && ok; ++n) {
    IntPolynomial lhs{1};
    for (int pi : parts) lhs *= gaussian_binomial(n + pi, pi);
    if (lhs != rhs.t_row(n)) {
      ok = false;
      detail = "t^" + std::to_string(n) + ": " + lhs.to_string("q") + " vs " + rhs.t_row(n).to_string("q");
    }
  }
  out.report.add("multiset q-binomial product series", ok, detail);
  return out;
}

}  // namespace ppart
