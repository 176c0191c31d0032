#ifndef ZRISK_SENSITIVITY_HPP_
#define ZRISK_SENSITIVITY_HPP_

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/ranking.hpp"
#include "zrisk/waspas.hpp"

namespace zrisk {

/// One weighting scenario of the sensitivity sweep: crisp weight per
/// criterion, plus the optional fuzzy triple it was printed with. The fuzzy
/// triples are annotation only — the published ones are not consistent with
/// their own crisp values, so nothing is derived from them.
struct WeightCase {
  std::string case_id;
  std::map<std::string, double> weights;
  std::map<std::string, std::array<double, 3>> fuzzy_annotation;
};

/// Spearman rank correlation over two rank vectors (mid-rank tie handling).
/// Equals 1 - 6*sum(d^2)/(n(n^2-1)) when both vectors are tie-free.
[[nodiscard]] inline double spearman_rank_correlation(const std::vector<double>& r1,
                                                      const std::vector<double>& r2) {
  if (r1.size() != r2.size()) {
    throw validation_error("spearman: rank vectors differ in length");
  }
  if (r1.size() < 2) {
    throw validation_error("spearman: need at least two ranks");
  }
  const auto a = mid_ranks(r1);
  const auto b = mid_ranks(r2);
  const double n = static_cast<double>(a.size());
  double mean = (n + 1.0) / 2.0;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - mean) * (b[i] - mean);
    var_a += (a[i] - mean) * (a[i] - mean);
    var_b += (b[i] - mean) * (b[i] - mean);
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw validation_error("spearman: a rank vector is constant");
  }
  return cov / std::sqrt(var_a * var_b);
}

[[nodiscard]] inline double spearman_rank_correlation(const std::vector<int>& r1,
                                                      const std::vector<int>& r2) {
  return spearman_rank_correlation(std::vector<double>(r1.begin(), r1.end()),
                                   std::vector<double>(r2.begin(), r2.end()));
}

namespace detail {

inline std::vector<double> case_weights_for(const WeightCase& c,
                                            const std::vector<Criterion>& criteria) {
  std::vector<double> w;
  double sum = 0.0;
  for (const auto& crit : criteria) {
    auto it = c.weights.find(crit.id);
    if (it == c.weights.end()) {
      throw validation_error("case " + c.case_id + " has no weight for criterion " + crit.id);
    }
    if (it->second < 0.0) {
      throw validation_error("case " + c.case_id + " has a negative weight for " + crit.id);
    }
    w.push_back(it->second);
    sum += it->second;
  }
  if (c.weights.size() != criteria.size()) {
    throw validation_error("case " + c.case_id + " weights criteria absent from the matrix");
  }
  if (sum <= 0.0) {
    throw validation_error("case " + c.case_id + " has all-zero weights");
  }
  for (auto& x : w) x /= sum;
  return w;
}

}  // namespace detail

/// Rerun the chosen WASPAS pipeline with the case's weights (renormalized to
/// sum to one) substituted for the derived ones.
[[nodiscard]] inline RankingResult apply_weight_case(const std::vector<RatingJudgment>& judgments,
                                                     const std::vector<std::string>& alternatives,
                                                     const std::vector<Criterion>& criteria,
                                                     const WeightCase& weight_case,
                                                     RatingMode mode = RatingMode::z,
                                                     double tie_tolerance = 1e-9) {
  return run_waspas(judgments, alternatives, criteria,
                    detail::case_weights_for(weight_case, criteria), mode, tie_tolerance);
}

struct StabilityReport {
  std::vector<std::string> case_ids;
  std::vector<std::string> failure_modes;
  std::vector<std::vector<int>> rank_matrix;  // rank_matrix[fm][case]
  std::vector<std::pair<int, int>> rank_ranges;
  std::map<std::string, double> pairwise_spearman;  // "caseA/caseB"
  std::vector<std::string> always_rank_1;
  std::vector<RankingResult> case_results;
};

/// One ranking per case plus the cross-case stability digest.
[[nodiscard]] inline StabilityReport stability_sweep(const std::vector<RatingJudgment>& judgments,
                                                     const std::vector<std::string>& alternatives,
                                                     const std::vector<Criterion>& criteria,
                                                     const std::vector<WeightCase>& cases,
                                                     RatingMode mode = RatingMode::z,
                                                     double tie_tolerance = 1e-9) {
  if (cases.empty()) {
    throw validation_error("sensitivity sweep needs at least one weight case");
  }
  StabilityReport report;
  report.failure_modes = alternatives;
  for (const auto& c : cases) {
    report.case_ids.push_back(c.case_id);
    report.case_results.push_back(
        apply_weight_case(judgments, alternatives, criteria, c, mode, tie_tolerance));
  }

  report.rank_matrix.assign(alternatives.size(), std::vector<int>(cases.size(), 0));
  for (std::size_t k = 0; k < cases.size(); ++k) {
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
      report.rank_matrix[i][k] = report.case_results[k].alternatives[i].rank;
    }
  }
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    int lo = report.rank_matrix[i][0], hi = report.rank_matrix[i][0];
    for (int rank : report.rank_matrix[i]) {
      lo = std::min(lo, rank);
      hi = std::max(hi, rank);
    }
    report.rank_ranges.emplace_back(lo, hi);
    if (hi == 1) report.always_rank_1.push_back(alternatives[i]);
  }
  for (std::size_t a = 0; a < cases.size(); ++a) {
    for (std::size_t b = a + 1; b < cases.size(); ++b) {
      std::vector<int> ra, rb;
      for (std::size_t i = 0; i < alternatives.size(); ++i) {
        ra.push_back(report.rank_matrix[i][a]);
        rb.push_back(report.rank_matrix[i][b]);
      }
      report.pairwise_spearman[report.case_ids[a] + "/" + report.case_ids[b]] =
          spearman_rank_correlation(ra, rb);
    }
  }
  return report;
}

/// The five published SODCT weight cases. Crisp values as printed; the fuzzy
/// triples are carried verbatim as annotation (several are not ordered and
/// none matches the centroid of its printed crisp value).
[[nodiscard]] inline std::vector<WeightCase> paper_sodct_cases() {
  auto make = [](std::string id, std::array<double, 5> w,
                 std::array<std::array<double, 3>, 5> fuzzy) {
    WeightCase c;
    c.case_id = std::move(id);
    static const std::array<std::string, 5> factors = {"S", "O", "D", "C", "T"};
    for (std::size_t i = 0; i < 5; ++i) {
      c.weights[factors[i]] = w[i];
      c.fuzzy_annotation[factors[i]] = fuzzy[i];
    }
    return c;
  };
  return {
      make("Case 0", {0.234, 0.363, 0.115, 0.185, 0.103},
           {{{0.26, 0.30, 0.35}, {0.36, 0.32, 0.38}, {0.25, 0.12, 0.29}, {0.25, 0.32, 0.36},
             {0.09, 0.15, 0.22}}}),
      make("Case 1", {0.5, 0.2, 0.2, 0.05, 0.05},
           {{{0.38, 0.32, 0.48}, {0.22, 0.29, 0.32}, {0.26, 0.15, 0.31}, {0.02, 0.01, 0.13},
             {0.09, 0.03, 0.19}}}),
      make("Case 2", {0.28, 0.05, 0.28, 0.11, 0.28},
           {{{0.22, 0.23, 0.39}, {0.16, 0.10, 0.19}, {0.29, 0.23, 0.32}, {0.09, 0.06, 0.16},
             {0.28, 0.33, 0.39}}}),
      make("Case 3", {0.46, 0.02, 0.11, 0.29, 0.12},
           {{{0.46, 0.28, 0.38}, {0.15, 0.01, 0.17}, {0.12, 0.08, 0.14}, {0.39, 0.20, 0.29},
             {0.10, 0.09, 0.28}}}),
      make("Case 4", {0.08, 0.19, 0.29, 0.29, 0.15},
           {{{0.02, 0.01, 0.09}, {0.20, 0.12, 0.36}, {0.20, 0.19, 0.34}, {0.35, 0.25, 0.38},
             {0.19, 0.20, 0.29}}}),
  };
}

}  // namespace zrisk

#endif  // ZRISK_SENSITIVITY_HPP_
