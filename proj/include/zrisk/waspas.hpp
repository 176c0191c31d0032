#ifndef ZRISK_WASPAS_HPP_
#define ZRISK_WASPAS_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/fuzzy.hpp"
#include "zrisk/ranking.hpp"
#include "zrisk/scales.hpp"
#include "zrisk/swara.hpp"

namespace zrisk {

enum class Direction { beneficial, non_beneficial };

struct Criterion {
  std::string id;
  std::string name;
  Direction direction = Direction::beneficial;
};

/// One expert's linguistic rating of one alternative against one criterion.
/// The reliability term is absent in the plain fuzzy baseline.
struct RatingJudgment {
  std::string expert_id;
  std::string alternative_id;
  std::string criterion_id;
  std::string rating_term;
  std::optional<std::string> reliability_term;
};

/// With or without the reliability dimension: `z` converts each judgment
/// through the Z-number transformation, `fuzzy` uses the raw rating TFN.
enum class RatingMode { z, fuzzy };

/// Alternatives x criteria grid of TFN cells, complete by construction.
struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<Criterion> criteria;
  std::vector<std::vector<TFN>> cells;  // cells[row][col]

  [[nodiscard]] std::size_t rows() const { return alternatives.size(); }
  [[nodiscard]] std::size_t cols() const { return criteria.size(); }
};

struct AlternativeScore {
  std::string id;
  double q_bar = 0.0;  // defuzzified weighted-sum score
  double p_bar = 0.0;  // defuzzified weighted-product score
  double k = 0.0;      // blended utility
  int rank = 0;
};

struct RankingResult {
  std::vector<AlternativeScore> alternatives;  // in input alternative order
  double lambda = 0.0;
  std::vector<std::vector<std::string>> ties;  // tied alternative ids, size >= 2
};

/// Average the experts' converted judgments into a complete decision matrix.
/// Every expert must cover the full alternatives x criteria grid exactly once.
[[nodiscard]] inline DecisionMatrix build_decision_matrix(
    const std::vector<RatingJudgment>& judgments, const std::vector<std::string>& alternatives,
    const std::vector<Criterion>& criteria, RatingMode mode) {
  if (alternatives.empty() || criteria.empty()) {
    throw validation_error("decision matrix needs at least one alternative and one criterion");
  }
  std::set<std::string> alt_ids(alternatives.begin(), alternatives.end());
  std::set<std::string> crit_ids;
  for (const auto& c : criteria) crit_ids.insert(c.id);

  std::set<std::string> experts;
  std::map<std::tuple<std::string, std::string, std::string>, const RatingJudgment*> seen;
  for (const auto& j : judgments) {
    if (!alt_ids.count(j.alternative_id)) {
      throw validation_error("rating references unknown alternative " + j.alternative_id);
    }
    if (!crit_ids.count(j.criterion_id)) {
      throw validation_error("rating references unknown criterion " + j.criterion_id);
    }
    const auto key = std::make_tuple(j.expert_id, j.alternative_id, j.criterion_id);
    if (!seen.emplace(key, &j).second) {
      throw validation_error("duplicate rating for (" + j.expert_id + ", " + j.alternative_id +
                             ", " + j.criterion_id + ")");
    }
    experts.insert(j.expert_id);
  }
  if (experts.empty()) {
    throw validation_error("no rating judgments supplied");
  }

  std::vector<std::string> missing;
  for (const auto& e : experts) {
    for (const auto& alt : alternatives) {
      for (const auto& crit : criteria) {
        if (!seen.count(std::make_tuple(e, alt, crit.id))) {
          missing.push_back("(" + e + ", " + alt + ", " + crit.id + ")");
        }
      }
    }
  }
  if (!missing.empty()) {
    std::ostringstream out;
    out << "incomplete rating grid; missing " << missing.size() << " cell(s):";
    for (const auto& m : missing) out << ' ' << m;
    throw validation_error(out.str());
  }

  DecisionMatrix matrix;
  matrix.alternatives = alternatives;
  matrix.criteria = criteria;
  matrix.cells.reserve(alternatives.size());
  const double n_experts = static_cast<double>(experts.size());
  for (const auto& alt : alternatives) {
    std::vector<TFN> row;
    row.reserve(criteria.size());
    for (const auto& crit : criteria) {
      double a = 0.0, b = 0.0, c = 0.0;
      for (const auto& e : experts) {
        const auto* j = seen.at(std::make_tuple(e, alt, crit.id));
        TFN t = [&] {
          if (mode == RatingMode::fuzzy) return rating_scale().at(j->rating_term);
          if (!j->reliability_term) {
            throw validation_error("rating for (" + j->expert_id + ", " + j->alternative_id +
                                   ", " + j->criterion_id +
                                   ") lacks the reliability term required in z mode");
          }
          return rating_term_to_tfn(j->rating_term, *j->reliability_term);
        }();
        a += t.a();
        b += t.b();
        c += t.c();
      }
      row.emplace_back(a / n_experts, b / n_experts, c / n_experts);
    }
    matrix.cells.push_back(std::move(row));
  }
  return matrix;
}

/// Normalize columns into [0,1]^3: beneficial columns divide by the column's
/// largest upper bound; non-beneficial columns map each cell to the column's
/// smallest lower bound over the reversed components.
[[nodiscard]] inline DecisionMatrix normalize_matrix(const DecisionMatrix& h) {
  DecisionMatrix out;
  out.alternatives = h.alternatives;
  out.criteria = h.criteria;
  out.cells.assign(h.rows(), {});

  for (std::size_t j = 0; j < h.cols(); ++j) {
    const auto& crit = h.criteria[j];
    if (crit.direction == Direction::beneficial) {
      double max_c = 0.0;
      for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h.cells[i][j].a() < 0.0) {
          throw validation_error("column " + crit.id + " has a negative cell");
        }
        max_c = std::max(max_c, h.cells[i][j].c());
      }
      if (!(max_c > 0.0)) {
        throw validation_error("degenerate beneficial column " + crit.id +
                               ": all upper bounds are zero");
      }
      for (std::size_t i = 0; i < h.rows(); ++i) {
        out.cells[i].push_back(scale(h.cells[i][j], 1.0 / max_c));
      }
    } else {
      double min_a = 0.0;
      bool first = true;
      for (std::size_t i = 0; i < h.rows(); ++i) {
        if (!(h.cells[i][j].a() > 0.0)) {
          throw validation_error("degenerate non-beneficial column " + crit.id +
                                 ": lower bounds must be strictly positive");
        }
        min_a = first ? h.cells[i][j].a() : std::min(min_a, h.cells[i][j].a());
        first = false;
      }
      for (std::size_t i = 0; i < h.rows(); ++i) {
        const auto& cell = h.cells[i][j];
        out.cells[i].emplace_back(min_a / cell.c(), min_a / cell.b(), min_a / cell.a());
      }
    }
  }
  return out;
}

namespace detail {

inline void check_weight_vector(const DecisionMatrix& h, const std::vector<double>& w) {
  if (w.size() != h.cols()) {
    std::ostringstream out;
    out << "weight vector has " << w.size() << " entries for " << h.cols() << " criteria";
    throw validation_error(out.str());
  }
}

}  // namespace detail

/// Weighted-sum scores: per alternative, the weight-scaled componentwise sum
/// of its normalized cells.
[[nodiscard]] inline std::vector<TFN> wsm_scores(const DecisionMatrix& h,
                                                 const std::vector<double>& weights) {
  detail::check_weight_vector(h, weights);
  std::vector<TFN> q;
  q.reserve(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    TFN acc(0.0, 0.0, 0.0);
    for (std::size_t j = 0; j < h.cols(); ++j) {
      acc = acc + scale(h.cells[i][j], weights[j]);
    }
    q.push_back(acc);
  }
  return q;
}

/// Weighted-product scores: per alternative, the componentwise product of its
/// normalized cells raised to the weights.
[[nodiscard]] inline std::vector<TFN> wpm_scores(const DecisionMatrix& h,
                                                 const std::vector<double>& weights) {
  detail::check_weight_vector(h, weights);
  std::vector<TFN> p;
  p.reserve(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    TFN acc(1.0, 1.0, 1.0);
    for (std::size_t j = 0; j < h.cols(); ++j) {
      acc = acc * pow(h.cells[i][j], weights[j]);
    }
    p.push_back(acc);
  }
  return p;
}

/// Blend defuzzified WSM and WPM scores into the utility K and rank
/// descending. lambda is the product-share of total defuzzified score mass;
/// K_i = lambda * Qbar_i + (1 - lambda) * Pbar_i.
[[nodiscard]] inline RankingResult utility_ranking(const std::vector<std::string>& ids,
                                                   const std::vector<TFN>& q,
                                                   const std::vector<TFN>& p,
                                                   double tie_tolerance = 1e-9) {
  if (ids.size() != q.size() || q.size() != p.size() || q.empty()) {
    throw validation_error("utility_ranking: ids, WSM and WPM scores must have equal nonzero length");
  }
  RankingResult result;
  double sum_q = 0.0, sum_p = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    AlternativeScore s;
    s.id = ids[i];
    s.q_bar = centroid(q[i]);
    s.p_bar = centroid(p[i]);
    result.alternatives.push_back(s);
    sum_q += s.q_bar;
    sum_p += s.p_bar;
  }
  if (sum_q + sum_p == 0.0) {
    throw validation_error("degenerate scores: every defuzzified WSM and WPM score is zero");
  }
  result.lambda = sum_p / (sum_q + sum_p);

  std::vector<double> k;
  k.reserve(q.size());
  for (auto& s : result.alternatives) {
    s.k = result.lambda * s.q_bar + (1.0 - result.lambda) * s.p_bar;
    k.push_back(s.k);
  }
  const RankedScores ranked = rank_descending(k, ids, tie_tolerance);
  for (std::size_t i = 0; i < ids.size(); ++i) result.alternatives[i].rank = ranked.ranks[i];
  for (const auto& group : ranked.ties) {
    std::vector<std::string> tie_ids;
    for (std::size_t idx : group) tie_ids.push_back(ids[idx]);
    result.ties.push_back(std::move(tie_ids));
  }
  return result;
}

/// End-to-end pipeline over already-aligned crisp weights.
[[nodiscard]] inline RankingResult run_waspas(const std::vector<RatingJudgment>& judgments,
                                              const std::vector<std::string>& alternatives,
                                              const std::vector<Criterion>& criteria,
                                              const std::vector<double>& weights, RatingMode mode,
                                              double tie_tolerance = 1e-9) {
  const DecisionMatrix h = build_decision_matrix(judgments, alternatives, criteria, mode);
  const DecisionMatrix normalized = normalize_matrix(h);
  const auto q = wsm_scores(normalized, weights);
  const auto p = wpm_scores(normalized, weights);
  return utility_ranking(alternatives, q, p, tie_tolerance);
}

namespace detail {

/// Crisp weights reordered to the matrix's criterion layout.
inline std::vector<double> align_weights(const CriterionWeights& weights,
                                         const std::vector<Criterion>& criteria) {
  std::map<std::string, double> by_id;
  for (std::size_t i = 0; i < weights.criteria.size(); ++i) {
    by_id[weights.criteria[i]] = weights.crisp[i];
  }
  std::vector<double> aligned;
  aligned.reserve(criteria.size());
  for (const auto& c : criteria) {
    auto it = by_id.find(c.id);
    if (it == by_id.end()) {
      throw validation_error("no weight derived for criterion " + c.id);
    }
    aligned.push_back(it->second);
  }
  if (aligned.size() != by_id.size()) {
    throw validation_error("weight vector covers criteria absent from the decision matrix");
  }
  return aligned;
}

}  // namespace detail

[[nodiscard]] inline RankingResult run_zwaspas(const std::vector<RatingJudgment>& judgments,
                                               const std::vector<std::string>& alternatives,
                                               const std::vector<Criterion>& criteria,
                                               const CriterionWeights& weights,
                                               double tie_tolerance = 1e-9) {
  return run_waspas(judgments, alternatives, criteria, detail::align_weights(weights, criteria),
                    RatingMode::z, tie_tolerance);
}

[[nodiscard]] inline RankingResult run_fuzzy_waspas(const std::vector<RatingJudgment>& judgments,
                                                    const std::vector<std::string>& alternatives,
                                                    const std::vector<Criterion>& criteria,
                                                    const CriterionWeights& weights,
                                                    double tie_tolerance = 1e-9) {
  return run_waspas(judgments, alternatives, criteria, detail::align_weights(weights, criteria),
                    RatingMode::fuzzy, tie_tolerance);
}

}  // namespace zrisk

#endif  // ZRISK_WASPAS_HPP_
