#ifndef ZRISK_SURVEY_STATS_HPP_
#define ZRISK_SURVEY_STATS_HPP_

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/ranking.hpp"

namespace zrisk::stats {

/// Respondents x items grid of scores.
struct ItemMatrix {
  std::vector<std::string> items;
  std::vector<std::vector<double>> rows;  // rows[respondent][item]

  [[nodiscard]] std::size_t respondents() const { return rows.size(); }

  void validate() const {
    if (items.empty()) throw validation_error("item matrix has no items");
    for (const auto& row : rows) {
      if (row.size() != items.size()) {
        throw validation_error("item matrix is ragged: a respondent row does not cover every item");
      }
    }
  }
};

namespace detail {

inline double mean(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

/// Unbiased sample variance.
inline double variance(const std::vector<double>& xs) {
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / (static_cast<double>(xs.size()) - 1.0);
}

inline double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double mx = mean(xs), my = mean(ys);
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cov += (xs[i] - mx) * (ys[i] - my);
    vx += (xs[i] - mx) * (xs[i] - mx);
    vy += (ys[i] - my) * (ys[i] - my);
  }
  if (vx == 0.0 || vy == 0.0) {
    throw validation_error("correlation undefined: a variable has zero variance");
  }
  return cov / std::sqrt(vx * vy);
}

inline std::vector<double> column(const ItemMatrix& m, std::size_t j) {
  std::vector<double> xs;
  xs.reserve(m.respondents());
  for (const auto& row : m.rows) xs.push_back(row[j]);
  return xs;
}

inline double alpha_of(const ItemMatrix& m) {
  const double k = static_cast<double>(m.items.size());
  std::vector<double> totals(m.respondents(), 0.0);
  double item_var_sum = 0.0;
  for (std::size_t j = 0; j < m.items.size(); ++j) {
    item_var_sum += variance(column(m, j));
  }
  for (std::size_t r = 0; r < m.respondents(); ++r) {
    totals[r] = std::accumulate(m.rows[r].begin(), m.rows[r].end(), 0.0);
  }
  const double total_var = variance(totals);
  if (total_var == 0.0) {
    throw validation_error("Cronbach's alpha undefined: total-score variance is zero");
  }
  return k / (k - 1.0) * (1.0 - item_var_sum / total_var);
}

}  // namespace detail

struct CronbachItem {
  std::string id;
  double alpha_if_deleted = 0.0;
  double item_total_correlation = 0.0;  // corrected: item vs total minus item
};

struct CronbachResult {
  double alpha = 0.0;
  std::vector<CronbachItem> items;
};

/// Cronbach's alpha with per-item deletion diagnostics.
[[nodiscard]] inline CronbachResult cronbach_alpha(const ItemMatrix& m) {
  m.validate();
  if (m.items.size() < 2) {
    throw validation_error("Cronbach's alpha needs at least two items");
  }
  if (m.respondents() < 2) {
    throw validation_error("Cronbach's alpha needs at least two respondents");
  }
  CronbachResult result;
  result.alpha = detail::alpha_of(m);
  for (std::size_t j = 0; j < m.items.size(); ++j) {
    CronbachItem item;
    item.id = m.items[j];

    const auto xs = detail::column(m, j);
    std::vector<double> rest(m.respondents(), 0.0);
    for (std::size_t r = 0; r < m.respondents(); ++r) {
      rest[r] = std::accumulate(m.rows[r].begin(), m.rows[r].end(), 0.0) - xs[r];
    }
    item.item_total_correlation = detail::pearson(xs, rest);

    if (m.items.size() == 2) {
      // Deleting one of two items leaves a single column; alpha is undefined
      // there, so mirror the common convention of reporting NaN.
      item.alpha_if_deleted = std::numeric_limits<double>::quiet_NaN();
    } else {
      ItemMatrix reduced;
      for (std::size_t t = 0; t < m.items.size(); ++t) {
        if (t != j) reduced.items.push_back(m.items[t]);
      }
      for (const auto& row : m.rows) {
        std::vector<double> r;
        for (std::size_t t = 0; t < row.size(); ++t) {
          if (t != j) r.push_back(row[t]);
        }
        reduced.rows.push_back(std::move(r));
      }
      item.alpha_if_deleted = detail::alpha_of(reduced);
    }
    result.items.push_back(item);
  }
  return result;
}

struct KruskalResult {
  double h = 0.0;
  int df = 0;
  double p = 1.0;
};

/// Kruskal-Wallis H over >= 2 groups, mid-ranks for ties, tie-corrected, with
/// the chi-square approximation for p.
[[nodiscard]] inline KruskalResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) {
    throw validation_error("Kruskal-Wallis needs at least two groups");
  }
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.empty()) throw validation_error("Kruskal-Wallis groups must be nonempty");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  const double n = static_cast<double>(pooled.size());
  const auto ranks = mid_ranks(pooled);

  double h = 0.0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) rank_sum += ranks[offset + i];
    h += rank_sum * rank_sum / static_cast<double>(g.size());
    offset += g.size();
  }
  h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);

  // Tie correction: 1 - sum(t^3 - t) / (n^3 - n) over tie groups.
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  const double correction = 1.0 - tie_term / (n * n * n - n);

  KruskalResult result;
  result.df = static_cast<int>(groups.size()) - 1;
  result.h = correction == 0.0 ? 0.0 : h / correction;  // all values identical
  if (std::abs(result.h) < 1e-13) result.h = 0.0;        // exact-null noise
  const boost::math::chi_squared_distribution<double> chi2(result.df);
  result.p = result.h <= 0.0 ? 1.0 : boost::math::cdf(boost::math::complement(chi2, result.h));
  return result;
}

/// Per-item mean of within-respondent mid-ranks (rank 1 = the respondent's
/// lowest score).
[[nodiscard]] inline std::vector<double> mean_ranks(const ItemMatrix& m) {
  m.validate();
  if (m.respondents() == 0) {
    throw validation_error("mean ranks need at least one respondent");
  }
  std::vector<double> sums(m.items.size(), 0.0);
  for (const auto& row : m.rows) {
    const auto ranks = mid_ranks(row);
    for (std::size_t j = 0; j < ranks.size(); ++j) sums[j] += ranks[j];
  }
  for (auto& s : sums) s /= static_cast<double>(m.respondents());
  return sums;
}

/// Column-oriented numeric dataset (one column per survey variable).
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // values[col][row]

  [[nodiscard]] std::size_t rows() const { return values.empty() ? 0 : values[0].size(); }

  [[nodiscard]] const std::vector<double>& column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return values[i];
    }
    std::ostringstream out;
    out << "unknown column '" << name << "'; available:";
    for (const auto& c : columns) out << ' ' << c;
    throw validation_error(out.str());
  }
};

struct OlsResult {
  std::vector<double> beta;
  double r_squared = 0.0;
};

/// Ordinary least squares of y on named design columns (intercept included
/// implicitly as the first coefficient). Rank deficiency raises a validation
/// error naming the collinear column(s).
[[nodiscard]] inline OlsResult ols(const std::vector<std::vector<double>>& design_columns,
                                   const std::vector<std::string>& column_names,
                                   const std::vector<double>& y) {
  const std::size_t n = y.size();
  const std::size_t k = design_columns.size() + 1;
  if (n < k + 1) {
    throw validation_error("too few observations for the regression design");
  }
  for (const auto& col : design_columns) {
    if (col.size() != n) {
      throw validation_error("regression columns differ in length");
    }
  }

  Eigen::MatrixXd x(n, k);
  for (std::size_t r = 0; r < n; ++r) x(static_cast<Eigen::Index>(r), 0) = 1.0;
  for (std::size_t c = 0; c < design_columns.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c + 1)) = design_columns[c][r];
    }
  }
  Eigen::VectorXd yv(n);
  for (std::size_t r = 0; r < n; ++r) yv(static_cast<Eigen::Index>(r)) = y[r];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-10);
  if (qr.rank() < static_cast<Eigen::Index>(k)) {
    const auto perm = qr.colsPermutation().indices();
    std::ostringstream out;
    out << "design matrix is rank-deficient; collinear column(s):";
    for (Eigen::Index i = qr.rank(); i < static_cast<Eigen::Index>(k); ++i) {
      const Eigen::Index original = perm(i);
      out << ' ' << (original == 0 ? std::string("intercept")
                                   : column_names[static_cast<std::size_t>(original - 1)]);
    }
    throw validation_error(out.str());
  }

  const Eigen::VectorXd beta = qr.solve(yv);
  const Eigen::VectorXd residual = yv - x * beta;
  const double y_mean = yv.mean();
  const double sst = (yv.array() - y_mean).square().sum();
  if (sst == 0.0) {
    throw validation_error("dependent variable has zero variance");
  }
  OlsResult result;
  result.beta.assign(beta.data(), beta.data() + beta.size());
  result.r_squared = 1.0 - residual.squaredNorm() / sst;
  return result;
}

/// Moderated-regression specification. The interaction defaults to
/// predictor x moderator; the literal presets below may point it elsewhere.
struct RegressionSpec {
  std::string dependent;
  std::string predictor;
  std::string moderator;
  std::optional<std::pair<std::string, std::string>> interaction;
};

struct RegressionResult {
  std::array<double, 4> beta = {0.0, 0.0, 0.0, 0.0};  // intercept, predictor, moderator, interaction
  double r_squared = 0.0;
  std::string interaction_label;
};

[[nodiscard]] inline RegressionResult moderated_regression(const RegressionSpec& spec,
                                                           const Dataset& data) {
  const auto& y = data.column(spec.dependent);
  const auto& x = data.column(spec.predictor);
  const auto& m = data.column(spec.moderator);
  const std::string left = spec.interaction ? spec.interaction->first : spec.predictor;
  const std::string right = spec.interaction ? spec.interaction->second : spec.moderator;
  const auto& il = data.column(left);
  const auto& ir = data.column(right);

  if (y.size() < 5) {
    throw validation_error("moderated regression needs at least five observations");
  }
  std::vector<double> inter(y.size(), 0.0);
  for (std::size_t i = 0; i < y.size(); ++i) inter[i] = il[i] * ir[i];

  const std::string inter_label = left + "*" + right;
  const OlsResult fit =
      ols({x, m, inter}, {spec.predictor, spec.moderator, inter_label}, y);

  RegressionResult result;
  for (std::size_t i = 0; i < 4; ++i) result.beta[i] = fit.beta[i];
  result.r_squared = fit.r_squared;
  result.interaction_label = inter_label;
  return result;
}

/// The four hypothesis-test equations as named specs. The `literal` variants
/// keep the interaction pairs as originally transcribed (two of which
/// mismatch their own main effects); the `corrected` variants use
/// predictor x moderator.
[[nodiscard]] inline RegressionSpec regression_preset(const std::string& name) {
  if (name == "eq2") return {"P", "CLS", "FMCS", {}};
  if (name == "eq3") return {"P", "DS", "NFMCS", std::make_pair(std::string("CLS"), std::string("NFMCS"))};
  if (name == "eq3-corrected") return {"P", "DS", "NFMCS", {}};
  if (name == "eq4") return {"P", "CLS", "NFMCS", std::make_pair(std::string("CLS"), std::string("FMCS"))};
  if (name == "eq4-corrected") return {"P", "CLS", "NFMCS", {}};
  if (name == "eq5") return {"P", "DS", "FMCS", {}};
  throw validation_error("unknown regression preset '" + name +
                         "'; valid: eq2 eq3 eq3-corrected eq4 eq4-corrected eq5");
}

/// Split respondents by strategy score: rows with value < threshold go to the
/// first (cost-leadership) dataset, the rest to the second (differentiation).
[[nodiscard]] inline std::pair<Dataset, Dataset> split_by_strategy(const Dataset& data,
                                                                   const std::string& strategy_column,
                                                                   double threshold = 3.0) {
  const auto& strategy = data.column(strategy_column);
  Dataset below, at_or_above;
  below.columns = data.columns;
  at_or_above.columns = data.columns;
  below.values.assign(data.columns.size(), {});
  at_or_above.values.assign(data.columns.size(), {});
  for (std::size_t r = 0; r < strategy.size(); ++r) {
    Dataset& target = strategy[r] < threshold ? below : at_or_above;
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      target.values[c].push_back(data.values[c][r]);
    }
  }
  return {below, at_or_above};
}

}  // namespace zrisk::stats

#endif  // ZRISK_SURVEY_STATS_HPP_
