#ifndef ZRISK_IO_HPP_
#define ZRISK_IO_HPP_

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/csv.hpp"
#include "zrisk/errors.hpp"
#include "zrisk/fmea.hpp"
#include "zrisk/sensitivity.hpp"
#include "zrisk/survey_stats.hpp"
#include "zrisk/swara.hpp"
#include "zrisk/util.hpp"
#include "zrisk/waspas.hpp"

namespace zrisk::io {

struct InputPaths {
  std::filesystem::path criteria;
  std::filesystem::path failure_modes;
  std::filesystem::path weighting;
  std::filesystem::path ratings;
  std::optional<std::filesystem::path> sodct;
};

/// Fully cross-validated judgment sets ready for the pipelines.
struct Inputs {
  std::vector<Criterion> criteria;
  std::vector<FailureMode> failure_modes;
  std::vector<CriterionJudgment> weighting;
  std::vector<RatingJudgment> ratings;
  std::vector<SodctRating> sodct;
  bool has_sodct = false;
  std::map<std::string, std::string> digests;  // file name -> content hash

  [[nodiscard]] std::vector<std::string> failure_mode_ids() const {
    std::vector<std::string> ids;
    for (const auto& fm : failure_modes) ids.push_back(fm.id);
    return ids;
  }
};

namespace detail {

inline void expect_header(const CsvTable& table, const std::vector<std::string>& expected) {
  if (table.header != expected) {
    std::ostringstream out;
    out << table.source << ": expected header";
    for (const auto& h : expected) out << " " << h;
    out << "; got";
    for (const auto& h : table.header) out << " " << h;
    throw validation_error(out.str());
  }
}

inline int parse_int(const CsvTable& table, std::size_t row, std::size_t col) {
  const std::string& text = table.rows[row][col];
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    std::ostringstream out;
    out << table.source << ":" << table.line_numbers[row] << ": '" << text
        << "' is not an integer";
    throw validation_error(out.str());
  }
  return value;
}

inline double parse_real(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw validation_error(context + ": '" + text + "' is not a number");
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace detail

[[nodiscard]] inline std::vector<Criterion> load_criteria(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  detail::expect_header(table, {"id", "name", "direction"});
  std::vector<Criterion> criteria;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    Criterion c;
    c.id = table.rows[i][0];
    c.name = table.rows[i][1];
    const std::string& dir = table.rows[i][2];
    if (dir == "beneficial") {
      c.direction = Direction::beneficial;
    } else if (dir == "non-beneficial") {
      c.direction = Direction::non_beneficial;
    } else {
      std::ostringstream out;
      out << table.source << ":" << table.line_numbers[i] << ": direction must be"
          << " 'beneficial' or 'non-beneficial', got '" << dir << "'";
      throw validation_error(out.str());
    }
    if (c.id.empty() || !seen.insert(c.id).second) {
      std::ostringstream out;
      out << table.source << ":" << table.line_numbers[i] << ": criterion ids must be"
          << " nonempty and unique ('" << c.id << "')";
      throw validation_error(out.str());
    }
    criteria.push_back(c);
  }
  if (criteria.empty()) throw validation_error(path.string() + ": no criteria defined");
  return criteria;
}

[[nodiscard]] inline std::vector<FailureMode> load_failure_modes(
    const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  detail::expect_header(table, {"id", "label"});
  std::vector<FailureMode> modes;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    FailureMode fm{table.rows[i][0], table.rows[i][1]};
    if (fm.id.empty() || !seen.insert(fm.id).second) {
      std::ostringstream out;
      out << table.source << ":" << table.line_numbers[i] << ": failure-mode ids must be"
          << " nonempty and unique ('" << fm.id << "')";
      throw validation_error(out.str());
    }
    modes.push_back(fm);
  }
  if (modes.empty()) throw validation_error(path.string() + ": no failure modes defined");
  return modes;
}

[[nodiscard]] inline std::vector<CriterionJudgment> load_weighting_judgments(
    const std::filesystem::path& path, const std::vector<Criterion>& criteria) {
  const CsvTable table = read_csv(path);
  detail::expect_header(
      table, {"expert_id", "criterion_id", "rank_position", "importance_term", "reliability_term"});
  std::set<std::string> criterion_ids;
  for (const auto& c : criteria) criterion_ids.insert(c.id);

  std::vector<CriterionJudgment> judgments;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CriterionJudgment j;
    j.expert_id = table.rows[i][0];
    j.criterion_id = table.rows[i][1];
    j.rank_position = detail::parse_int(table, i, 2);
    if (!table.rows[i][3].empty()) j.importance_term = table.rows[i][3];
    if (!table.rows[i][4].empty()) j.reliability_term = table.rows[i][4];
    if (!criterion_ids.count(j.criterion_id)) {
      std::ostringstream out;
      out << table.source << ":" << table.line_numbers[i] << ": unknown criterion '"
          << j.criterion_id << "'";
      throw validation_error(out.str());
    }
    try {
      if (j.importance_term) static_cast<void>(weighting_importance_scale().at(*j.importance_term));
      if (j.reliability_term) static_cast<void>(reliability_scale().at(*j.reliability_term));
    } catch (const validation_error& e) {
      std::ostringstream out;
      out << table.source << ":" << table.line_numbers[i] << ": " << e.what();
      throw validation_error(out.str());
    }
    judgments.push_back(j);
  }
  validate_criterion_judgments(judgments);

  // Every expert must rank exactly the declared criterion set.
  std::map<std::string, std::set<std::string>> per_expert;
  for (const auto& j : judgments) per_expert[j.expert_id].insert(j.criterion_id);
  for (const auto& [expert, ids] : per_expert) {
    if (ids != criterion_ids) {
      std::ostringstream out;
      out << path.string() << ": expert " << expert << " does not rank the declared criterion set;";
      for (const auto& id : criterion_ids) {
        if (!ids.count(id)) out << " missing " << id << ";";
      }
      throw validation_error(out.str());
    }
  }
  return judgments;
}

[[nodiscard]] inline std::vector<RatingJudgment> load_rating_judgments(
    const std::filesystem::path& path, const std::vector<Criterion>& criteria,
    const std::vector<FailureMode>& failure_modes) {
  const CsvTable table = read_csv(path);
  detail::expect_header(
      table, {"expert_id", "failure_mode_id", "criterion_id", "rating_term", "reliability_term"});
  std::set<std::string> criterion_ids, fm_ids;
  for (const auto& c : criteria) criterion_ids.insert(c.id);
  for (const auto& fm : failure_modes) fm_ids.insert(fm.id);

  std::vector<RatingJudgment> judgments;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    RatingJudgment j;
    j.expert_id = table.rows[i][0];
    j.alternative_id = table.rows[i][1];
    j.criterion_id = table.rows[i][2];
    j.rating_term = table.rows[i][3];
    if (!table.rows[i][4].empty()) j.reliability_term = table.rows[i][4];

    std::ostringstream ctx;
    ctx << table.source << ":" << table.line_numbers[i];
    if (!fm_ids.count(j.alternative_id)) {
      throw validation_error(ctx.str() + ": unknown failure mode '" + j.alternative_id + "'");
    }
    if (!criterion_ids.count(j.criterion_id)) {
      throw validation_error(ctx.str() + ": unknown criterion '" + j.criterion_id + "'");
    }
    try {
      static_cast<void>(rating_scale().at(j.rating_term));
      if (j.reliability_term) static_cast<void>(reliability_scale().at(*j.reliability_term));
    } catch (const validation_error& e) {
      throw validation_error(ctx.str() + ": " + e.what());
    }
    judgments.push_back(j);
  }
  return judgments;
}

[[nodiscard]] inline std::vector<SodctRating> load_sodct_ratings(
    const std::filesystem::path& path, const std::vector<FailureMode>& failure_modes) {
  const CsvTable table = read_csv(path);
  detail::expect_header(table, {"expert_id", "failure_mode_id", "factor", "value"});
  std::set<std::string> fm_ids;
  for (const auto& fm : failure_modes) fm_ids.insert(fm.id);

  std::vector<SodctRating> ratings;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    std::ostringstream ctx;
    ctx << table.source << ":" << table.line_numbers[i];
    SodctRating r;
    r.expert_id = table.rows[i][0];
    r.failure_mode_id = table.rows[i][1];
    try {
      r.factor = risk_factor_from_string(table.rows[i][2]);
    } catch (const validation_error& e) {
      throw validation_error(ctx.str() + ": " + e.what());
    }
    r.value = detail::parse_int(table, i, 3);
    if (r.value < 1 || r.value > 10) {
      throw validation_error(ctx.str() + ": value must be in 1..10, got " +
                             std::to_string(r.value));
    }
    if (!fm_ids.count(r.failure_mode_id)) {
      throw validation_error(ctx.str() + ": unknown failure mode '" + r.failure_mode_id + "'");
    }
    if (!seen.insert({r.expert_id, r.failure_mode_id, table.rows[i][2]}).second) {
      throw validation_error(ctx.str() + ": duplicate rating for (" + r.expert_id + ", " +
                             r.failure_mode_id + ", " + table.rows[i][2] + ")");
    }
    ratings.push_back(r);
  }
  return ratings;
}

/// Load and cross-validate the full input bundle. Grid completeness of the
/// rating judgments is checked here so that no computation starts on partial
/// data.
[[nodiscard]] inline Inputs load_inputs(const InputPaths& paths) {
  Inputs inputs;
  inputs.criteria = load_criteria(paths.criteria);
  inputs.failure_modes = load_failure_modes(paths.failure_modes);
  inputs.weighting = load_weighting_judgments(paths.weighting, inputs.criteria);
  inputs.ratings = load_rating_judgments(paths.ratings, inputs.criteria, inputs.failure_modes);

  // Completeness probe; the decision-matrix builder performs the
  // authoritative check and names missing triples.
  static_cast<void>(build_decision_matrix(inputs.ratings, inputs.failure_mode_ids(),
                                          inputs.criteria, RatingMode::fuzzy));

  if (paths.sodct) {
    inputs.sodct = load_sodct_ratings(*paths.sodct, inputs.failure_modes);
    inputs.has_sodct = true;
    for (const auto& fm : inputs.failure_modes) {
      std::map<RiskFactor, int> counts;
      for (const auto& r : inputs.sodct) {
        if (r.failure_mode_id == fm.id) counts[r.factor] += 1;
      }
      for (RiskFactor f : kRiskFactors) {
        if (!counts.count(f)) {
          throw validation_error(paths.sodct->string() + ": failure mode " + fm.id +
                                 " lacks ratings for factor " + to_string(f));
        }
      }
    }
  }

  inputs.digests["criteria"] = fnv1a64_hex(detail::read_file(paths.criteria));
  inputs.digests["failure_modes"] = fnv1a64_hex(detail::read_file(paths.failure_modes));
  inputs.digests["weighting"] = fnv1a64_hex(detail::read_file(paths.weighting));
  inputs.digests["ratings"] = fnv1a64_hex(detail::read_file(paths.ratings));
  if (paths.sodct) inputs.digests["sodct"] = fnv1a64_hex(detail::read_file(*paths.sodct));
  return inputs;
}

/// cases.json: [{"case_id": ..., "weights": {criterion: crisp}}, ...] with an
/// optional "fuzzy" annotation per case.
[[nodiscard]] inline std::vector<WeightCase> load_cases(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(detail::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(path.string() + ": " + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw validation_error(path.string() + ": expected a nonempty JSON array of cases");
  }
  std::vector<WeightCase> cases;
  for (const auto& entry : doc) {
    WeightCase c;
    if (!entry.contains("case_id") || !entry.contains("weights") ||
        !entry["weights"].is_object()) {
      throw validation_error(path.string() +
                             ": each case needs a 'case_id' and a 'weights' object");
    }
    c.case_id = entry["case_id"].get<std::string>();
    for (const auto& [key, value] : entry["weights"].items()) {
      if (!value.is_number()) {
        throw validation_error(path.string() + ": weight for '" + key + "' in case '" +
                               c.case_id + "' is not a number");
      }
      c.weights[key] = value.get<double>();
    }
    if (entry.contains("fuzzy")) {
      for (const auto& [key, value] : entry["fuzzy"].items()) {
        if (!value.is_array() || value.size() != 3) {
          throw validation_error(path.string() + ": fuzzy annotation for '" + key +
                                 "' must be a 3-element array");
        }
        c.fuzzy_annotation[key] = {value[0].get<double>(), value[1].get<double>(),
                                   value[2].get<double>()};
      }
    }
    cases.push_back(c);
  }
  return cases;
}

/// Resolve a --cases argument: the built-in preset name or a JSON file path.
[[nodiscard]] inline std::vector<WeightCase> resolve_cases(const std::string& spec) {
  if (spec == "paper-sodct") return paper_sodct_cases();
  return load_cases(spec);
}

/// survey.csv: respondent_id plus one numeric column per item/variable.
[[nodiscard]] inline stats::Dataset load_survey(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  if (table.header.empty() || table.header[0] != "respondent_id") {
    throw validation_error(path.string() + ": first column must be respondent_id");
  }
  if (table.header.size() < 2) {
    throw validation_error(path.string() + ": no item/variable columns");
  }
  stats::Dataset data;
  for (std::size_t c = 1; c < table.header.size(); ++c) data.columns.push_back(table.header[c]);
  data.values.assign(data.columns.size(), {});
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (std::size_t c = 1; c < table.header.size(); ++c) {
      std::ostringstream ctx;
      ctx << table.source << ":" << table.line_numbers[i] << " column " << table.header[c];
      data.values[c - 1].push_back(detail::parse_real(table.rows[i][c], ctx.str()));
    }
  }
  if (data.rows() == 0) throw validation_error(path.string() + ": no respondent rows");
  return data;
}

}  // namespace zrisk::io

#endif  // ZRISK_IO_HPP_
