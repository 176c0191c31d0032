#ifndef ZRISK_TESTS_ORACLES_HPP_
#define ZRISK_TESTS_ORACLES_HPP_

// Independent numerical oracles. These deliberately avoid the closed forms
// used by the library so that agreement is meaningful.

#include <cstddef>
#include <vector>

#include "zrisk/fuzzy.hpp"

namespace zrisk_tests {

// Center-of-area of the triangular membership (a, b, c) by composite
// trapezoid quadrature of  integral(y * mu(y)) / integral(mu(y)),
// splitting at the kink y = b. `points` is the total grid size.
inline double centroid_by_integration(const zrisk::TFN& t, std::size_t points = 100000) {
  const double a = t.a(), b = t.b(), c = t.c();
  if (c - a <= 0.0) return b;  // point-mass membership

  auto mu = [&](double y) {
    if (y < a || y > c) return 0.0;
    if (y < b) return (y - a) / (b - a);
    if (y > b) return (c - y) / (c - b);
    return 1.0;  // y == b; also covers degenerate sides
  };

  auto trapezoid = [&](double lo, double hi, std::size_t n, auto f) {
    if (hi <= lo || n < 2) return 0.0;
    const double h = (hi - lo) / static_cast<double>(n - 1);
    double acc = 0.5 * (f(lo) + f(hi));
    for (std::size_t i = 1; i + 1 < n; ++i) acc += f(lo + h * static_cast<double>(i));
    return acc * h;
  };

  const std::size_t half = points / 2;
  auto y_mu = [&](double y) { return y * mu(y); };
  const double num = trapezoid(a, b, half, y_mu) + trapezoid(b, c, half, y_mu);
  const double den = trapezoid(a, b, half, mu) + trapezoid(b, c, half, mu);
  return num / den;
}

// Kruskal-Wallis H via the variance-of-mean-ranks identity
//   H = (N - 1) * sum_i n_i (rbar_i - rbar)^2 / sum_ij (r_ij - rbar)^2,
// which absorbs ties without an explicit correction factor. Independent of
// the rank-sum formula route used by the library.
inline double kruskal_wallis_by_rank_variance(const std::vector<std::vector<double>>& groups) {
  struct Tagged {
    double value;
    std::size_t group;
  };
  std::vector<Tagged> pooled;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (double v : groups[g]) pooled.push_back({v, g});
  }
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return pooled[l].value < pooled[r].value; });

  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]].value == pooled[order[i]].value) ++j;
    const double mid = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
    i = j + 1;
  }

  const double grand = (static_cast<double>(n) + 1.0) / 2.0;
  std::vector<double> group_mean(groups.size(), 0.0);
  std::vector<double> group_size(groups.size(), 0.0);
  double denom = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    group_mean[pooled[k].group] += rank[k];
    group_size[pooled[k].group] += 1.0;
    denom += (rank[k] - grand) * (rank[k] - grand);
  }
  if (denom == 0.0) return 0.0;  // every pooled value identical
  double numer = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double mean_g = group_mean[g] / group_size[g];
    numer += group_size[g] * (mean_g - grand) * (mean_g - grand);
  }
  return (static_cast<double>(n) - 1.0) * numer / denom;
}

}  // namespace zrisk_tests

#endif  // ZRISK_TESTS_ORACLES_HPP_
