#ifndef ZRISK_FMEA_HPP_
#define ZRISK_FMEA_HPP_

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/ranking.hpp"
#include "zrisk/sensitivity.hpp"

namespace zrisk {

struct FailureMode {
  std::string id;
  std::string label;
};

/// The five risk factors: Severity, Occurrence, Detection, Cost, Time.
enum class RiskFactor { S, O, D, C, T };

inline constexpr std::array<RiskFactor, 5> kRiskFactors = {
    RiskFactor::S, RiskFactor::O, RiskFactor::D, RiskFactor::C, RiskFactor::T};

[[nodiscard]] inline std::string to_string(RiskFactor f) {
  switch (f) {
    case RiskFactor::S: return "S";
    case RiskFactor::O: return "O";
    case RiskFactor::D: return "D";
    case RiskFactor::C: return "C";
    case RiskFactor::T: return "T";
  }
  throw error("unreachable risk factor");
}

[[nodiscard]] inline RiskFactor risk_factor_from_string(const std::string& s) {
  if (s == "S") return RiskFactor::S;
  if (s == "O") return RiskFactor::O;
  if (s == "D") return RiskFactor::D;
  if (s == "C") return RiskFactor::C;
  if (s == "T") return RiskFactor::T;
  throw validation_error("unknown risk factor '" + s + "'; valid codes: S O D C T");
}

/// One expert's 1-10 rating of one factor for one failure mode.
struct SodctRating {
  std::string expert_id;
  std::string failure_mode_id;
  RiskFactor factor = RiskFactor::S;
  int value = 0;
};

/// Risk priority number for one failure mode: the product over the five
/// factors of the mean expert rating per factor.
[[nodiscard]] inline double rpn_score(const std::vector<SodctRating>& ratings) {
  std::map<RiskFactor, double> sums;
  std::map<RiskFactor, int> counts;
  for (const auto& r : ratings) {
    if (r.value < 1 || r.value > 10) {
      std::ostringstream out;
      out << "rating value " << r.value << " for (" << r.expert_id << ", " << r.failure_mode_id
          << ", " << to_string(r.factor) << ") is outside 1..10";
      throw validation_error(out.str());
    }
    sums[r.factor] += r.value;
    counts[r.factor] += 1;
  }
  double rpn = 1.0;
  for (RiskFactor f : kRiskFactors) {
    auto it = counts.find(f);
    if (it == counts.end()) {
      throw validation_error("missing ratings for factor " + to_string(f));
    }
    rpn *= sums[f] / it->second;
  }
  return rpn;
}

struct RpnRanking {
  std::vector<std::string> ids;
  std::vector<double> scores;
  std::vector<int> ranks;
  std::vector<std::vector<std::string>> ties;  // exactly-equal score groups
};

/// Rank RPN scores descending. Exactly-equal scores tie; the tie groups are a
/// first-class output because score collisions are the known weakness of the
/// plain RPN.
[[nodiscard]] inline RpnRanking rank_by_rpn(const std::vector<std::string>& ids,
                                            const std::vector<double>& scores) {
  if (ids.empty() || ids.size() != scores.size()) {
    throw validation_error("rank_by_rpn: ids and scores must have equal nonzero length");
  }
  RpnRanking out;
  out.ids = ids;
  out.scores = scores;
  const RankedScores ranked = rank_descending(scores, ids, 0.0);
  out.ranks = ranked.ranks;
  for (const auto& group : ranked.ties) {
    std::vector<std::string> tie_ids;
    for (std::size_t idx : group) tie_ids.push_back(ids[idx]);
    out.ties.push_back(std::move(tie_ids));
  }
  return out;
}

/// Group per-failure-mode ratings and rank them all.
[[nodiscard]] inline RpnRanking rank_by_rpn(const std::vector<FailureMode>& failure_modes,
                                            const std::vector<SodctRating>& ratings) {
  std::map<std::string, std::vector<SodctRating>> grouped;
  for (const auto& r : ratings) grouped[r.failure_mode_id].push_back(r);
  std::vector<std::string> ids;
  std::vector<double> scores;
  for (const auto& fm : failure_modes) {
    auto it = grouped.find(fm.id);
    if (it == grouped.end()) {
      throw validation_error("no SODCT ratings for failure mode " + fm.id);
    }
    ids.push_back(fm.id);
    scores.push_back(rpn_score(it->second));
  }
  return rank_by_rpn(ids, scores);
}

/// Per-failure-mode row of the three-method comparison table.
struct ComparisonRow {
  std::string id;
  std::optional<double> rpn;
  std::optional<int> rpn_rank;
  std::optional<double> fuzzy_k;
  std::optional<int> fuzzy_rank;
  std::optional<double> z_k;
  std::optional<int> z_rank;
};

struct MethodComparison {
  std::vector<ComparisonRow> rows;
  // Pairwise rank agreement, keyed "method1/method2" with methods in
  // {rpn, fuzzy-waspas, z-waspas} order.
  std::map<std::string, double> spearman;
};

/// Merge rank columns from the available methods and compute pairwise
/// Spearman agreement. All supplied rankings must cover the same failure
/// modes in the same order.
[[nodiscard]] inline MethodComparison compare_methods(
    const std::vector<std::string>& failure_mode_ids, const std::optional<RpnRanking>& rpn,
    const std::optional<RankingResult>& fuzzy, const std::optional<RankingResult>& z) {
  MethodComparison cmp;
  for (const auto& id : failure_mode_ids) cmp.rows.push_back({id, {}, {}, {}, {}, {}, {}});

  auto expect_same_ids = [&](const std::vector<std::string>& ids, const char* method) {
    if (ids != failure_mode_ids) {
      throw validation_error(std::string("failure-mode set of ") + method +
                             " ranking does not match the comparison set");
    }
  };

  std::map<std::string, std::vector<int>> rank_columns;
  if (rpn) {
    expect_same_ids(rpn->ids, "rpn");
    for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
      cmp.rows[i].rpn = rpn->scores[i];
      cmp.rows[i].rpn_rank = rpn->ranks[i];
    }
    rank_columns["rpn"] = rpn->ranks;
  }
  auto add_waspas = [&](const RankingResult& r, const char* method, bool is_fuzzy) {
    std::vector<std::string> ids;
    std::vector<int> ranks;
    for (const auto& alt : r.alternatives) {
      ids.push_back(alt.id);
      ranks.push_back(alt.rank);
    }
    expect_same_ids(ids, method);
    for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
      if (is_fuzzy) {
        cmp.rows[i].fuzzy_k = r.alternatives[i].k;
        cmp.rows[i].fuzzy_rank = r.alternatives[i].rank;
      } else {
        cmp.rows[i].z_k = r.alternatives[i].k;
        cmp.rows[i].z_rank = r.alternatives[i].rank;
      }
    }
    rank_columns[method] = ranks;
  };
  if (fuzzy) add_waspas(*fuzzy, "fuzzy-waspas", true);
  if (z) add_waspas(*z, "z-waspas", false);

  static const std::vector<std::string> method_order = {"rpn", "fuzzy-waspas", "z-waspas"};
  for (std::size_t i = 0; i < method_order.size(); ++i) {
    for (std::size_t j = i + 1; j < method_order.size(); ++j) {
      auto a = rank_columns.find(method_order[i]);
      auto b = rank_columns.find(method_order[j]);
      if (a != rank_columns.end() && b != rank_columns.end()) {
        cmp.spearman[method_order[i] + "/" + method_order[j]] =
            spearman_rank_correlation(a->second, b->second);
      }
    }
  }
  return cmp;
}

}  // namespace zrisk

#endif  // ZRISK_FMEA_HPP_
