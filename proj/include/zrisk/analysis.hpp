#ifndef ZRISK_ANALYSIS_HPP_
#define ZRISK_ANALYSIS_HPP_

#include <json.hpp>

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/fmea.hpp"
#include "zrisk/io.hpp"
#include "zrisk/sensitivity.hpp"
#include "zrisk/swara.hpp"
#include "zrisk/util.hpp"
#include "zrisk/waspas.hpp"

namespace zrisk {

/// Canonical report form: an insertion-ordered JSON document, so identical
/// inputs serialize byte-identically.
using Report = nlohmann::ordered_json;

struct AnalysisConfig {
  SwaraRecurrence swara_recurrence = SwaraRecurrence::standard;
  EiMode ei_mode = EiMode::table;
  int rounding = 2;
  double tie_tolerance = 1e-9;
  std::vector<std::string> methods = {"rpn", "fuzzy-waspas", "z-waspas"};
  std::string sensitivity_cases;  // empty, a preset name, or a cases.json path

  void validate() const {
    if (rounding < 0) throw validation_error("config: rounding must be >= 0");
    if (!(tie_tolerance > 0.0)) throw validation_error("config: tie_tolerance must be > 0");
    if (methods.empty()) throw validation_error("config: at least one method is required");
    static const std::set<std::string> known = {"rpn", "fuzzy-waspas", "z-waspas"};
    for (const auto& m : methods) {
      if (!known.count(m)) {
        throw validation_error("config: unknown method '" + m +
                               "'; valid: rpn fuzzy-waspas z-waspas");
      }
    }
  }

  [[nodiscard]] bool has_method(const std::string& name) const {
    for (const auto& m : methods) {
      if (m == name) return true;
    }
    return false;
  }
};

/// Parse a JSON config file body; absent keys keep their defaults.
[[nodiscard]] inline AnalysisConfig parse_config(const nlohmann::json& doc) {
  AnalysisConfig config;
  if (doc.contains("swara_recurrence")) {
    const auto value = doc["swara_recurrence"].get<std::string>();
    if (value == "standard") config.swara_recurrence = SwaraRecurrence::standard;
    else if (value == "literal") config.swara_recurrence = SwaraRecurrence::literal;
    else throw validation_error("config: swara_recurrence must be 'standard' or 'literal'");
  }
  if (doc.contains("ei_mode")) {
    const auto value = doc["ei_mode"].get<std::string>();
    if (value == "table") config.ei_mode = EiMode::table;
    else if (value == "computed") config.ei_mode = EiMode::computed;
    else throw validation_error("config: ei_mode must be 'table' or 'computed'");
  }
  if (doc.contains("rounding")) config.rounding = doc["rounding"].get<int>();
  if (doc.contains("tie_tolerance")) config.tie_tolerance = doc["tie_tolerance"].get<double>();
  if (doc.contains("methods")) config.methods = doc["methods"].get<std::vector<std::string>>();
  if (doc.contains("sensitivity_cases")) {
    config.sensitivity_cases = doc["sensitivity_cases"].get<std::string>();
  }
  config.validate();
  return config;
}

namespace detail {

inline Report tfn_json(const TFN& t) { return Report::array({t.a(), t.b(), t.c()}); }

inline Report ranking_json(const RankingResult& r) {
  Report out;
  out["lambda"] = r.lambda;
  out["failure_modes"] = Report::array();
  out["q_bar"] = Report::array();
  out["p_bar"] = Report::array();
  out["k"] = Report::array();
  out["ranks"] = Report::array();
  for (const auto& alt : r.alternatives) {
    out["failure_modes"].push_back(alt.id);
    out["q_bar"].push_back(alt.q_bar);
    out["p_bar"].push_back(alt.p_bar);
    out["k"].push_back(alt.k);
    out["ranks"].push_back(alt.rank);
  }
  out["ties"] = r.ties;
  return out;
}

}  // namespace detail

/// Run the configured pipelines over validated inputs and assemble the
/// canonical report document.
[[nodiscard]] inline Report run_analysis(const AnalysisConfig& config, const io::Inputs& inputs) {
  config.validate();
  std::vector<std::string> warnings;

  Report report;
  report["metadata"]["tool"] = "zrisk";
  report["metadata"]["config"]["swara_recurrence"] =
      config.swara_recurrence == SwaraRecurrence::standard ? "standard" : "literal";
  report["metadata"]["config"]["ei_mode"] = config.ei_mode == EiMode::table ? "table" : "computed";
  report["metadata"]["config"]["rounding"] = config.rounding;
  report["metadata"]["config"]["tie_tolerance"] = config.tie_tolerance;
  report["metadata"]["config"]["methods"] = config.methods;
  report["metadata"]["config"]["sensitivity_cases"] = config.sensitivity_cases;
  report["metadata"]["inputs"] = inputs.digests;

  if (config.swara_recurrence == SwaraRecurrence::literal) {
    warnings.push_back(
        "literal SWARA recurrence in effect: weights increase along the ranked order for "
        "comparative-importance terms below one");
  }

  // Criterion weighting.
  const CriterionWeights weights =
      derive_weights(inputs.weighting, config.swara_recurrence, config.ei_mode);
  report["weights"]["criteria"] = weights.criteria;
  report["weights"]["fuzzy_q"] = Report::array();
  report["weights"]["fuzzy_w"] = Report::array();
  for (const auto& q : weights.fuzzy_q) report["weights"]["fuzzy_q"].push_back(detail::tfn_json(q));
  for (const auto& w : weights.fuzzy_w) report["weights"]["fuzzy_w"].push_back(detail::tfn_json(w));
  report["weights"]["crisp"] = weights.crisp;

  // Methods.
  const auto fm_ids = inputs.failure_mode_ids();
  std::optional<RpnRanking> rpn;
  std::optional<RankingResult> fuzzy;
  std::optional<RankingResult> z;

  report["methods"] = Report::object();
  if (config.has_method("rpn")) {
    if (!inputs.has_sodct) {
      throw validation_error("method 'rpn' requires SODCT ratings (--sodct)");
    }
    rpn = rank_by_rpn(inputs.failure_modes, inputs.sodct);
    Report section;
    section["failure_modes"] = rpn->ids;
    section["scores"] = rpn->scores;
    section["scores_2dp"] = Report::array();
    section["scores_integer"] = Report::array();
    for (double score : rpn->scores) {
      section["scores_2dp"].push_back(round_half_up(score, 2));
      section["scores_integer"].push_back(static_cast<long long>(round_half_up(score, 0)));
    }
    section["ranks"] = rpn->ranks;
    section["ties"] = rpn->ties;
    report["methods"]["rpn"] = section;
    if (!rpn->ties.empty()) {
      std::ostringstream out;
      out << "rpn: " << rpn->ties.size() << " group(s) of failure modes share identical scores";
      warnings.push_back(out.str());
    }
  }
  if (config.has_method("fuzzy-waspas")) {
    fuzzy = run_fuzzy_waspas(inputs.ratings, fm_ids, inputs.criteria, weights,
                             config.tie_tolerance);
    report["methods"]["fuzzy-waspas"] = detail::ranking_json(*fuzzy);
    if (!fuzzy->ties.empty()) warnings.push_back("fuzzy-waspas: ties detected");
  }
  if (config.has_method("z-waspas")) {
    z = run_zwaspas(inputs.ratings, fm_ids, inputs.criteria, weights, config.tie_tolerance);
    report["methods"]["z-waspas"] = detail::ranking_json(*z);
    if (!z->ties.empty()) warnings.push_back("z-waspas: ties detected");
  }

  // Comparison across whatever ran.
  const int method_count = static_cast<int>(rpn.has_value()) + static_cast<int>(fuzzy.has_value()) +
                           static_cast<int>(z.has_value());
  if (method_count >= 2) {
    const MethodComparison cmp = compare_methods(fm_ids, rpn, fuzzy, z);
    Report section;
    section["failure_modes"] = fm_ids;
    if (rpn) {
      Report block;
      block["score"] = rpn->scores;
      block["rank"] = rpn->ranks;
      section["rpn"] = block;
    }
    auto waspas_block = [&](const RankingResult& r) {
      Report block;
      block["k"] = Report::array();
      block["rank"] = Report::array();
      for (const auto& alt : r.alternatives) {
        block["k"].push_back(alt.k);
        block["rank"].push_back(alt.rank);
      }
      return block;
    };
    if (fuzzy) section["fuzzy-waspas"] = waspas_block(*fuzzy);
    if (z) section["z-waspas"] = waspas_block(*z);
    section["spearman"] = cmp.spearman;
    report["comparison"] = section;
  }

  // Sensitivity sweep.
  if (!config.sensitivity_cases.empty()) {
    const auto cases = io::resolve_cases(config.sensitivity_cases);
    const RatingMode mode = config.has_method("z-waspas") || !config.has_method("fuzzy-waspas")
                                ? RatingMode::z
                                : RatingMode::fuzzy;
    const StabilityReport sweep = stability_sweep(inputs.ratings, fm_ids, inputs.criteria, cases,
                                                  mode, config.tie_tolerance);
    Report section;
    section["mode"] = mode == RatingMode::z ? "z" : "fuzzy";
    section["cases"] = sweep.case_ids;
    section["failure_modes"] = sweep.failure_modes;
    section["rank_matrix"] = sweep.rank_matrix;
    section["rank_ranges"] = Report::array();
    for (const auto& [lo, hi] : sweep.rank_ranges) {
      section["rank_ranges"].push_back(Report::array({lo, hi}));
    }
    section["pairwise_spearman"] = sweep.pairwise_spearman;
    section["always_rank_1"] = sweep.always_rank_1;
    Report case_weights = Report::object();
    for (const auto& c : cases) {
      Report entry = Report::object();
      for (const auto& crit : inputs.criteria) {
        auto it = c.weights.find(crit.id);
        if (it != c.weights.end()) entry[crit.id] = it->second;
      }
      case_weights[c.case_id] = entry;
    }
    section["case_weights"] = case_weights;
    report["sensitivity"] = section;
  }

  report["warnings"] = warnings;
  return report;
}

}  // namespace zrisk

#endif  // ZRISK_ANALYSIS_HPP_
