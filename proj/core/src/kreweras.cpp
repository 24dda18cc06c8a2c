#include "ppart/kreweras.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ppart/errors.hpp"

namespace ppart {

std::vector<std::vector<int>> tableau_row_sequences(const Partition& outer, const Partition& inner) {
  const auto cells = skew_cells(outer, inner);
  if (cells.size() > static_cast<std::size_t>(kMaxKrewerasCells)) throw SizeLimit("kreweras: more than 12 cells");
  const LabeledPoset P = shape_to_poset(outer, inner);
  std::vector<std::vector<int>> out;
  for_each_linear_extension(P, [&](std::span<const Element> order, std::span<const Label>) {
    std::vector<int> rows;
    rows.reserve(order.size());
    for (Element x : order) rows.push_back(cells[static_cast<std::size_t>(x)].first);
    out.push_back(std::move(rows));
  });
  return out;
}

int count_returns(const std::vector<int>& rows) {
  int r = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i + 1] < rows[i]) ++r;
  return r;
}

std::vector<Integer> kreweras_theta(const Partition& outer, const Partition& inner) {
  std::vector<Integer> theta;
  for (const auto& rows : tableau_row_sequences(outer, inner)) {
    const auto r = static_cast<std::size_t>(count_returns(rows));
    if (theta.size() <= r) theta.resize(r + 1, Integer(0));
    ++theta[r];
  }
  return theta;
}

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[n - 1][n - 1]);
}

Integer kreweras_w_det(const Partition& outer, const Partition& inner, int r) {
  validate_shape(outer, inner);
  const std::size_t h = outer.size();
  std::vector<std::vector<Integer>> m(h, std::vector<Integer>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      m[i][j] = binomial(static_cast<long>(outer[i]) - inner[j] + r,
                         static_cast<long>(i) - static_cast<long>(j) + r);
  return integer_determinant(std::move(m));
}

namespace {

std::vector<Partition> interval(const Partition& outer, const Partition& inner) {
  std::vector<Partition> out;
  Partition cur(outer.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == outer.size()) {
      out.push_back(cur);
      return;
    }
    const int hi = i == 0 ? outer[i] : std::min(outer[i], cur[i - 1]);
    for (int v = inner[i]; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

bool contained(const Partition& a, const Partition& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Integer kreweras_w_brute(const Partition& outer, const Partition& inner, int r) {
  validate_shape(outer, inner);
  if (r <= 0) return 1;
  const auto parts = interval(outer, inner);
  std::vector<Integer> f(parts.size(), Integer(1));
  for (int k = 1; k < r; ++k) {
    std::vector<Integer> g(parts.size(), Integer(0));
    for (std::size_t z = 0; z < parts.size(); ++z)
      for (std::size_t y = 0; y < parts.size(); ++y)
        if (contained(parts[y], parts[z])) g[z] += f[y];
    f = std::move(g);
  }
  Integer total = 0;
  for (const auto& v : f) total += v;
  return total;
}

KrewerasResult kreweras(const Partition& outer, const Partition& inner, int t_max) {
  KrewerasResult out;
  out.theta = kreweras_theta(outer, inner);
  const long cells = static_cast<long>(skew_cells(outer, inner).size());
  bool series_ok = true;
  bool brute_ok = true;
  std::string detail;
  for (int n = 0; n <= t_max; ++n) {
    out.w.push_back(kreweras_w_det(outer, inner, n));
    // Coefficient of t^n in sum theta_r t^r / (1-t)^(cells+1).
    Integer series = 0;
    for (std::size_t r = 0; r < out.theta.size() && static_cast<int>(r) <= n; ++r)
      series += out.theta[r] * binomial(n - static_cast<long>(r) + cells, cells);
    if (series != out.w.back() && series_ok) {
      series_ok = false;
      detail = "series differs at t^" + std::to_string(n);
    }
    if (kreweras_w_brute(outer, inner, n) != out.w.back() && brute_ok) {
      brute_ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("determinant differs from multichain count at r=") +
                std::to_string(n);
    }
  }
  out.report.add("theta series equals w", series_ok, detail);
  out.report.add("determinant equals multichain count", brute_ok, detail);
  return out;
}

std::pair<Partition, Partition> staircase_shape(const std::vector<int>& parts) {
  const std::size_t h = parts.size();
  Partition outer(h), inner(h);
  int below = 0;
  for (std::size_t k = h; k-- > 0;) {
    if (parts[k] < 0) throw ShapeError("staircase_shape: negative row length");
    inner[k] = below;
    below += parts[k];
    outer[k] = below;
  }
  return {outer, inner};
}

}  // namespace ppart
