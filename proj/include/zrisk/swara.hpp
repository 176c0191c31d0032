#ifndef ZRISK_SWARA_HPP_
#define ZRISK_SWARA_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/fuzzy.hpp"
#include "zrisk/scales.hpp"

namespace zrisk {

/// One expert's judgment of one criterion: its rank in the expert's own
/// ordering plus, for every rank but the first, how much less important it is
/// than the previous criterion and how reliable that statement is.
struct CriterionJudgment {
  std::string expert_id;
  std::string criterion_id;
  int rank_position = 0;
  std::optional<std::string> importance_term;
  std::optional<std::string> reliability_term;
};

/// Which recurrence turns comparative-importance terms into coefficients.
/// `standard` divides by (comparative importance + 1), the established SWARA
/// step that keeps weights non-increasing along the ranked order. `literal`
/// divides by the comparative importance alone, as sometimes transcribed;
/// with terms below one this inverts the ordering.
enum class SwaraRecurrence { standard, literal };

/// Criterion weights in fuzzy and defuzzified form.
struct CriterionWeights {
  std::vector<std::string> criteria;  // ranked order, most important first
  std::vector<TFN> fuzzy_q;
  std::vector<TFN> fuzzy_w;
  std::vector<double> crisp;  // nonnegative, sums to 1
};

namespace detail {

inline std::map<std::string, std::vector<const CriterionJudgment*>> group_by_expert(
    const std::vector<CriterionJudgment>& judgments) {
  std::map<std::string, std::vector<const CriterionJudgment*>> grouped;
  for (const auto& j : judgments) grouped[j.expert_id].push_back(&j);
  return grouped;
}

}  // namespace detail

/// Check structural validity of a weighting-judgment set: consistent
/// criterion sets across experts, rank positions forming a permutation of
/// 1..n per expert, and terms present exactly below each expert's top rank.
inline void validate_criterion_judgments(const std::vector<CriterionJudgment>& judgments) {
  if (judgments.empty()) {
    throw validation_error("no weighting judgments supplied");
  }
  const auto grouped = detail::group_by_expert(judgments);

  std::set<std::string> reference;
  std::string reference_expert;
  for (const auto& [expert, rows] : grouped) {
    std::set<std::string> criteria;
    std::set<int> ranks;
    for (const auto* row : rows) {
      if (!criteria.insert(row->criterion_id).second) {
        throw validation_error("expert " + expert + " judges criterion " +
                               row->criterion_id + " more than once");
      }
      if (row->rank_position < 1 || row->rank_position > static_cast<int>(rows.size()) ||
          !ranks.insert(row->rank_position).second) {
        std::ostringstream out;
        out << "expert " << expert << ": rank positions must form a permutation of 1.."
            << rows.size() << " (criterion " << row->criterion_id << " has rank "
            << row->rank_position << ")";
        throw validation_error(out.str());
      }
      const bool has_terms = row->importance_term.has_value() && row->reliability_term.has_value();
      const bool partial = row->importance_term.has_value() != row->reliability_term.has_value();
      if (partial) {
        throw validation_error("expert " + expert + ", criterion " + row->criterion_id +
                               ": importance and reliability terms must be given together");
      }
      if (row->rank_position == 1 && has_terms) {
        throw validation_error("expert " + expert + ": top-ranked criterion " +
                               row->criterion_id + " must not carry importance terms");
      }
      if (row->rank_position != 1 && !has_terms) {
        throw validation_error("expert " + expert + ": criterion " + row->criterion_id +
                               " at rank " + std::to_string(row->rank_position) +
                               " is missing importance/reliability terms");
      }
      if (has_terms) {
        static_cast<void>(weighting_importance_scale().at(*row->importance_term));
        static_cast<void>(reliability_scale().at(*row->reliability_term));
      }
    }
    if (reference.empty()) {
      reference = criteria;
      reference_expert = expert;
    } else if (criteria != reference) {
      std::ostringstream out;
      out << "experts " << reference_expert << " and " << expert
          << " rank different criterion sets;";
      for (const auto& c : reference) {
        if (!criteria.count(c)) out << " missing " << c << " for " << expert << ";";
      }
      for (const auto& c : criteria) {
        if (!reference.count(c)) out << " extra " << c << " for " << expert << ";";
      }
      throw validation_error(out.str());
    }
  }
}

/// Merge the experts' orderings into one list, most important first: ascending
/// mean rank position, ties broken by criterion id.
[[nodiscard]] inline std::vector<std::string> aggregate_rankings(
    const std::vector<CriterionJudgment>& judgments) {
  validate_criterion_judgments(judgments);

  std::map<std::string, double> rank_sum;
  std::map<std::string, int> count;
  for (const auto& j : judgments) {
    rank_sum[j.criterion_id] += j.rank_position;
    count[j.criterion_id] += 1;
  }
  std::vector<std::string> order;
  order.reserve(rank_sum.size());
  for (const auto& [id, sum] : rank_sum) order.push_back(id);
  std::sort(order.begin(), order.end(), [&](const std::string& l, const std::string& r) {
    const double ml = rank_sum[l] / count[l];
    const double mr = rank_sum[r] / count[r];
    if (ml != mr) return ml < mr;
    return l < r;
  });
  return order;
}

/// Comparative importance of each criterion below the top of the aggregated
/// order: per criterion, the componentwise mean over experts of the converted
/// (importance, reliability) judgment. Experts whose personal top criterion
/// lands below rank 1 in the aggregate contribute nothing for that criterion.
[[nodiscard]] inline std::vector<TFN> comparative_importance(
    const std::vector<CriterionJudgment>& judgments,
    const std::vector<std::string>& ordered_criteria, EiMode mode = EiMode::table) {
  std::map<std::string, std::vector<const CriterionJudgment*>> by_criterion;
  for (const auto& j : judgments) by_criterion[j.criterion_id].push_back(&j);

  std::vector<TFN> terms;
  for (std::size_t pos = 1; pos < ordered_criteria.size(); ++pos) {
    const auto& id = ordered_criteria[pos];
    auto it = by_criterion.find(id);
    if (it == by_criterion.end()) {
      throw validation_error("no judgments for criterion " + id);
    }
    double a = 0.0, b = 0.0, c = 0.0;
    int n = 0;
    for (const auto* row : it->second) {
      if (!row->importance_term) continue;  // the expert's own top criterion
      if (!row->reliability_term) {
        throw validation_error("expert " + row->expert_id + ", criterion " + id +
                               ": missing reliability term");
      }
      const TFN t = weighting_term_to_tfn(*row->importance_term, *row->reliability_term, mode);
      a += t.a();
      b += t.b();
      c += t.c();
      ++n;
    }
    if (n == 0) {
      throw validation_error("criterion " + id +
                             " has no importance judgments despite aggregate rank > 1");
    }
    terms.emplace_back(a / n, b / n, c / n);
  }
  return terms;
}

/// Coefficient recurrence of the stepwise weighting: q_1 = (1,1,1), then each
/// further coefficient divides the previous one by the comparative-importance
/// ratio chosen by `recurrence`.
[[nodiscard]] inline std::vector<TFN> swara_coefficients(
    const std::vector<TFN>& z_terms, SwaraRecurrence recurrence = SwaraRecurrence::standard) {
  std::vector<TFN> q;
  q.reserve(z_terms.size() + 1);
  q.emplace_back(1.0, 1.0, 1.0);
  for (const auto& z : z_terms) {
    const TFN divisor = recurrence == SwaraRecurrence::standard ? z + TFN(1.0, 1.0, 1.0) : z;
    q.push_back(divide(q.back(), divisor));
  }
  return q;
}

/// Normalize coefficients into weights: fuzzy weights by TFN division against
/// the coefficient sum, crisp weights by renormalized centroids so they sum
/// to one.
[[nodiscard]] inline CriterionWeights normalize_weights(
    const std::vector<TFN>& q, std::vector<std::string> criteria = {}) {
  if (q.empty()) {
    throw validation_error("cannot normalize an empty coefficient list");
  }
  TFN sum(0.0, 0.0, 0.0);
  for (const auto& t : q) {
    if (t.a() < 0.0) throw validation_error("SWARA coefficients must be nonnegative");
    sum = sum + t;
  }
  if (!(sum.a() > 0.0)) {
    throw validation_error("degenerate coefficients: componentwise sum has no positive lower bound");
  }

  CriterionWeights w;
  w.criteria = std::move(criteria);
  w.fuzzy_q = q;
  double centroid_sum = 0.0;
  for (const auto& t : q) {
    w.fuzzy_w.push_back(divide(t, sum));
    centroid_sum += centroid(w.fuzzy_w.back());
  }
  if (centroid_sum <= 0.0) {
    throw validation_error("degenerate coefficients: all fuzzy weights defuzzify to zero");
  }
  for (const auto& fw : w.fuzzy_w) w.crisp.push_back(centroid(fw) / centroid_sum);
  return w;
}

/// Full weighting pipeline: aggregate the rankings, average the comparative
/// importance, run the recurrence, normalize.
[[nodiscard]] inline CriterionWeights derive_weights(
    const std::vector<CriterionJudgment>& judgments,
    SwaraRecurrence recurrence = SwaraRecurrence::standard, EiMode mode = EiMode::table) {
  const auto order = aggregate_rankings(judgments);
  const auto terms = comparative_importance(judgments, order, mode);
  const auto q = swara_coefficients(terms, recurrence);
  return normalize_weights(q, order);
}

}  // namespace zrisk

#endif  // ZRISK_SWARA_HPP_
