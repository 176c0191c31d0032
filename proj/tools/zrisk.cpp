// zrisk: prioritize failure modes from multi-expert linguistic judgments.
//
// Subcommands: analyze (full pipeline + report), sensitivity (weight-case
// sweep), scales (dump the linguistic scales), stats (survey statistics).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/zrisk.hpp"

namespace {

using nlohmann::ordered_json;

zrisk::AnalysisConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zrisk::validation_error("cannot open config " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw zrisk::validation_error(path + ": " + e.what());
  }
  return zrisk::parse_config(doc);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct AnalyzeArgs {
  std::string criteria, failure_modes, weighting, ratings;
  std::string sodct, config, out, format = "json", methods, cases;
};

int run_analyze(const AnalyzeArgs& args) {
  zrisk::AnalysisConfig config;
  if (!args.config.empty()) config = load_config_file(args.config);
  if (!args.methods.empty()) config.methods = split_list(args.methods);
  if (!args.cases.empty()) config.sensitivity_cases = args.cases;
  config.validate();

  zrisk::io::InputPaths paths;
  paths.criteria = args.criteria;
  paths.failure_modes = args.failure_modes;
  paths.weighting = args.weighting;
  paths.ratings = args.ratings;
  if (!args.sodct.empty()) paths.sodct = args.sodct;

  const auto inputs = zrisk::io::load_inputs(paths);
  const zrisk::Report report = zrisk::run_analysis(config, inputs);
  zrisk::write_report(report, zrisk::report_format_from_string(args.format), args.out, std::cout);
  return 0;
}

struct SensitivityArgs {
  std::string criteria, failure_modes, ratings, cases;
  std::string out, format = "json", mode = "z";
};

int run_sensitivity(const SensitivityArgs& args) {
  const auto criteria = zrisk::io::load_criteria(args.criteria);
  const auto failure_modes = zrisk::io::load_failure_modes(args.failure_modes);
  const auto ratings = zrisk::io::load_rating_judgments(args.ratings, criteria, failure_modes);
  const auto cases = zrisk::io::resolve_cases(args.cases);

  zrisk::RatingMode mode;
  if (args.mode == "z") mode = zrisk::RatingMode::z;
  else if (args.mode == "fuzzy") mode = zrisk::RatingMode::fuzzy;
  else throw zrisk::validation_error("--mode must be 'z' or 'fuzzy'");

  std::vector<std::string> fm_ids;
  for (const auto& fm : failure_modes) fm_ids.push_back(fm.id);
  const auto sweep = zrisk::stability_sweep(ratings, fm_ids, criteria, cases, mode);

  zrisk::Report report;
  report["metadata"]["tool"] = "zrisk";
  report["metadata"]["config"]["rounding"] = 2;
  report["sensitivity"]["mode"] = args.mode;
  report["sensitivity"]["cases"] = sweep.case_ids;
  report["sensitivity"]["failure_modes"] = sweep.failure_modes;
  report["sensitivity"]["rank_matrix"] = sweep.rank_matrix;
  report["sensitivity"]["rank_ranges"] = zrisk::Report::array();
  for (const auto& [lo, hi] : sweep.rank_ranges) {
    report["sensitivity"]["rank_ranges"].push_back(zrisk::Report::array({lo, hi}));
  }
  report["sensitivity"]["pairwise_spearman"] = sweep.pairwise_spearman;
  report["sensitivity"]["always_rank_1"] = sweep.always_rank_1;
  report["warnings"] = zrisk::Report::array();

  zrisk::write_report(report, zrisk::report_format_from_string(args.format), args.out, std::cout);
  return 0;
}

int run_scales() {
  ordered_json doc;
  for (const auto* scale : {&zrisk::weighting_importance_scale(), &zrisk::reliability_scale(),
                            &zrisk::rating_scale()}) {
    ordered_json entries;
    for (const auto& [code, tfn] : scale->entries) {
      entries[code] = ordered_json::array({tfn.a(), tfn.b(), tfn.c()});
    }
    doc[scale->name] = entries;
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

zrisk::stats::ItemMatrix item_matrix_from(const zrisk::stats::Dataset& data,
                                          const std::vector<std::string>& items) {
  zrisk::stats::ItemMatrix m;
  m.items = items.empty() ? data.columns : items;
  std::vector<const std::vector<double>*> cols;
  for (const auto& name : m.items) cols.push_back(&data.column(name));
  for (std::size_t r = 0; r < data.rows(); ++r) {
    std::vector<double> row;
    for (const auto* col : cols) row.push_back((*col)[r]);
    m.rows.push_back(std::move(row));
  }
  return m;
}

int run_stats_cronbach(const std::string& input, const std::string& items_csv) {
  const auto data = zrisk::io::load_survey(input);
  const auto m = item_matrix_from(data, split_list(items_csv));
  const auto result = zrisk::stats::cronbach_alpha(m);

  ordered_json doc;
  doc["alpha"] = result.alpha;
  doc["items"] = ordered_json::array();
  const auto ranks = zrisk::stats::mean_ranks(m);
  for (std::size_t i = 0; i < result.items.size(); ++i) {
    ordered_json item;
    item["id"] = result.items[i].id;
    item["alpha_if_deleted"] = result.items[i].alpha_if_deleted;
    item["item_total_correlation"] = result.items[i].item_total_correlation;
    item["mean_rank"] = ranks[i];
    doc["items"].push_back(item);
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_stats_kruskal(const std::string& input, const std::string& columns_csv,
                      const std::string& value_col, const std::string& group_col) {
  const auto data = zrisk::io::load_survey(input);
  std::vector<std::vector<double>> groups;
  if (!columns_csv.empty()) {
    for (const auto& name : split_list(columns_csv)) groups.push_back(data.column(name));
  } else if (!value_col.empty() && !group_col.empty()) {
    const auto& values = data.column(value_col);
    const auto& labels = data.column(group_col);
    std::map<double, std::vector<double>> by_label;
    for (std::size_t i = 0; i < values.size(); ++i) by_label[labels[i]].push_back(values[i]);
    for (auto& [label, vs] : by_label) groups.push_back(std::move(vs));
  } else {
    throw zrisk::validation_error(
        "stats kruskal needs either --columns a,b,... or both --value and --group");
  }
  const auto result = zrisk::stats::kruskal_wallis(groups);
  ordered_json doc;
  doc["h"] = result.h;
  doc["df"] = result.df;
  doc["p"] = result.p;
  doc["groups"] = groups.size();
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_stats_regress(const std::string& input, const std::string& preset,
                      const std::string& dependent, const std::string& predictor,
                      const std::string& moderator, const std::string& interaction) {
  const auto data = zrisk::io::load_survey(input);
  zrisk::stats::RegressionSpec spec;
  if (!preset.empty()) {
    spec = zrisk::stats::regression_preset(preset);
  } else {
    if (dependent.empty() || predictor.empty() || moderator.empty()) {
      throw zrisk::validation_error(
          "stats regress needs --preset or all of --dependent --predictor --moderator");
    }
    spec.dependent = dependent;
    spec.predictor = predictor;
    spec.moderator = moderator;
    if (!interaction.empty()) {
      const auto star = interaction.find('*');
      if (star == std::string::npos) {
        throw zrisk::validation_error("--interaction must look like LEFT*RIGHT");
      }
      spec.interaction = std::make_pair(interaction.substr(0, star), interaction.substr(star + 1));
    }
  }
  const auto fit = zrisk::stats::moderated_regression(spec, data);
  ordered_json doc;
  doc["dependent"] = spec.dependent;
  doc["predictor"] = spec.predictor;
  doc["moderator"] = spec.moderator;
  doc["interaction"] = fit.interaction_label;
  doc["beta"] = fit.beta;
  doc["r_squared"] = fit.r_squared;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Failure-mode prioritization from multi-expert linguistic judgments"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Run the full prioritization pipeline");
  analyze->add_option("--criteria", analyze_args.criteria, "criteria.csv")->required();
  analyze->add_option("--failure-modes", analyze_args.failure_modes, "failure_modes.csv")
      ->required();
  analyze->add_option("--weighting", analyze_args.weighting, "weighting_judgments.csv")
      ->required();
  analyze->add_option("--ratings", analyze_args.ratings, "rating_judgments.csv")->required();
  analyze->add_option("--sodct", analyze_args.sodct, "sodct_ratings.csv (needed for rpn)");
  analyze->add_option("--config", analyze_args.config, "JSON config file");
  analyze->add_option("--out", analyze_args.out, "output directory");
  analyze->add_option("--format", analyze_args.format, "json|csv|markdown (default json)");
  analyze->add_option("--methods", analyze_args.methods,
                      "comma list from rpn,fuzzy-waspas,z-waspas");
  analyze->add_option("--cases", analyze_args.cases, "cases.json or 'paper-sodct'");

  SensitivityArgs sens_args;
  auto* sens = app.add_subcommand("sensitivity", "Weight-case sweep and rank stability");
  sens->add_option("--criteria", sens_args.criteria, "criteria.csv")->required();
  sens->add_option("--failure-modes", sens_args.failure_modes, "failure_modes.csv")->required();
  sens->add_option("--ratings", sens_args.ratings, "rating_judgments.csv")->required();
  sens->add_option("--cases", sens_args.cases, "cases.json or 'paper-sodct'")->required();
  sens->add_option("--mode", sens_args.mode, "z|fuzzy (default z)");
  sens->add_option("--out", sens_args.out, "output directory");
  sens->add_option("--format", sens_args.format, "json|csv|markdown (default json)");

  auto* scales = app.add_subcommand("scales", "Dump the linguistic scales as JSON");

  auto* stats = app.add_subcommand("stats", "Survey statistics");
  stats->require_subcommand(1);
  std::string stats_input, stats_items, stats_columns, stats_value, stats_group;
  std::string stats_preset, stats_dependent, stats_predictor, stats_moderator, stats_interaction;

  auto* cronbach = stats->add_subcommand("cronbach", "Cronbach's alpha with item diagnostics");
  cronbach->add_option("--input", stats_input, "survey.csv")->required();
  cronbach->add_option("--items", stats_items, "comma list of item columns (default: all)");

  auto* kruskal = stats->add_subcommand("kruskal", "Kruskal-Wallis H test");
  kruskal->add_option("--input", stats_input, "survey.csv")->required();
  kruskal->add_option("--columns", stats_columns, "comma list; each column is one group");
  kruskal->add_option("--value", stats_value, "value column (long format)");
  kruskal->add_option("--group", stats_group, "group column (long format)");

  auto* regress = stats->add_subcommand("regress", "Moderated regression (OLS)");
  regress->add_option("--input", stats_input, "survey.csv")->required();
  regress->add_option("--preset", stats_preset, "eq2|eq3|eq3-corrected|eq4|eq4-corrected|eq5");
  regress->add_option("--dependent", stats_dependent, "dependent column");
  regress->add_option("--predictor", stats_predictor, "predictor column");
  regress->add_option("--moderator", stats_moderator, "moderator column");
  regress->add_option("--interaction", stats_interaction,
                      "LEFT*RIGHT (default predictor*moderator)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (sens->parsed()) return run_sensitivity(sens_args);
    if (scales->parsed()) return run_scales();
    if (stats->parsed()) {
      if (cronbach->parsed()) return run_stats_cronbach(stats_input, stats_items);
      if (kruskal->parsed()) {
        return run_stats_kruskal(stats_input, stats_columns, stats_value, stats_group);
      }
      if (regress->parsed()) {
        return run_stats_regress(stats_input, stats_preset, stats_dependent, stats_predictor,
                                 stats_moderator, stats_interaction);
      }
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const zrisk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
