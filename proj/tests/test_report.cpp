#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "zrisk/analysis.hpp"
#include "zrisk/csv.hpp"
#include "zrisk/io.hpp"
#include "zrisk/report.hpp"

namespace fs = std::filesystem;

namespace {

class TempDir {
public:
  TempDir() : path_(fs::temp_directory_path() / ("zrisk_report_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
  }

private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string demo_cases(const TempDir& dir) {
  return dir.write("cases.json", R"([
    {"case_id": "Case 0", "weights": {"C1": 0.7, "C2": 0.3}},
    {"case_id": "Case 1", "weights": {"C1": 0.2, "C2": 0.8}}
  ])").string();
}

zrisk::io::Inputs small_inputs(const TempDir& dir) {
  zrisk::io::InputPaths paths;
  paths.criteria = dir.write("criteria.csv",
                             "id,name,direction\nC1,Alpha,beneficial\nC2,Beta,beneficial\n");
  paths.failure_modes = dir.write("failure_modes.csv", "id,label\nF1,first\nF2,second\nF3,third\n");
  paths.weighting = dir.write("weighting.csv",
                              "expert_id,criterion_id,rank_position,importance_term,reliability_term\n"
                              "E1,C1,1,,\nE1,C2,2,MOL,H\n");
  paths.ratings = dir.write("ratings.csv",
                            "expert_id,failure_mode_id,criterion_id,rating_term,reliability_term\n"
                            "E1,F1,C1,VG,VH\nE1,F1,C2,G,H\n"
                            "E1,F2,C1,F,M\nE1,F2,C2,MG,H\n"
                            "E1,F3,C1,P,W\nE1,F3,C2,MP,M\n");
  paths.sodct = dir.write("sodct.csv",
                          "expert_id,failure_mode_id,factor,value\n"
                          "E1,F1,S,9\nE1,F1,O,8\nE1,F1,D,7\nE1,F1,C,8\nE1,F1,T,9\n"
                          "E1,F2,S,5\nE1,F2,O,6\nE1,F2,D,5\nE1,F2,C,4\nE1,F2,T,6\n"
                          "E1,F3,S,2\nE1,F3,O,3\nE1,F3,D,2\nE1,F3,C,3\nE1,F3,T,2\n");
  return zrisk::io::load_inputs(paths);
}

}  // namespace

TEST_CASE("run_analysis produces every requested section") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  config.sensitivity_cases = "";

  const auto report = zrisk::run_analysis(config, inputs);
  CHECK(report.contains("metadata"));
  CHECK(report["weights"]["criteria"].size() == 2);
  CHECK(report["methods"].contains("rpn"));
  CHECK(report["methods"].contains("fuzzy-waspas"));
  CHECK(report["methods"].contains("z-waspas"));
  CHECK(report.contains("comparison"));
  CHECK(!report.contains("sensitivity"));

  // The dominating F1 leads everywhere.
  CHECK(report["methods"]["rpn"]["ranks"][0] == 1);
  CHECK(report["methods"]["z-waspas"]["ranks"][0] == 1);

  // RPN is reported raw, at 2 decimals and as a rounded integer.
  const double raw = report["methods"]["rpn"]["scores"][0].get<double>();
  CHECK(report["methods"]["rpn"]["scores_2dp"][0].get<double>() ==
        Catch::Approx(zrisk::round_half_up(raw, 2)));
  CHECK(report["methods"]["rpn"]["scores_integer"][0].get<long long>() ==
        static_cast<long long>(zrisk::round_half_up(raw, 0)));
}

TEST_CASE("method subsets omit the other sections") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  config.methods = {"z-waspas"};

  const auto report = zrisk::run_analysis(config, inputs);
  CHECK(report["methods"].contains("z-waspas"));
  CHECK(!report["methods"].contains("rpn"));
  CHECK(!report["methods"].contains("fuzzy-waspas"));
  CHECK(!report.contains("comparison"));  // nothing to compare against
}

TEST_CASE("rpn without sodct ratings is a validation error") {
  TempDir dir;
  auto inputs = small_inputs(dir);
  inputs.has_sodct = false;
  inputs.sodct.clear();
  zrisk::AnalysisConfig config;
  CHECK_THROWS_WITH(zrisk::run_analysis(config, inputs),
                    Catch::Matchers::ContainsSubstring("rpn"));
}

TEST_CASE("run_analysis is deterministic") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  config.sensitivity_cases = demo_cases(dir);
  const std::string first = zrisk::emit_json(zrisk::run_analysis(config, inputs));
  const std::string second = zrisk::emit_json(zrisk::run_analysis(config, inputs));
  CHECK(first == second);
}

TEST_CASE("markdown mirrors the published comparison layout") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  config.sensitivity_cases = demo_cases(dir);
  const auto report = zrisk::run_analysis(config, inputs);
  const std::string md = zrisk::emit_markdown(report);

  CHECK(md.find("| Failure mode | RPN | Rank | K_i (fuzzy-WASPAS) | Rank | K_i (Z-WASPAS) | Rank |") !=
        std::string::npos);
  CHECK(md.find("## Sensitivity") != std::string::npos);
  CHECK(md.find("Case 0") != std::string::npos);
}

TEST_CASE("markdown omits the sensitivity heading when the sweep is absent") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  const auto report = zrisk::run_analysis(config, inputs);
  const std::string md = zrisk::emit_markdown(report);
  CHECK(md.find("## Sensitivity") == std::string::npos);
  CHECK(md.find("## Criterion weights") != std::string::npos);
}

TEST_CASE("csv emission round-trips the rank columns") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  config.sensitivity_cases = demo_cases(dir);
  const auto report = zrisk::run_analysis(config, inputs);
  const auto files = zrisk::emit_csv(report);

  REQUIRE(files.count("comparison") == 1);
  REQUIRE(files.count("weights") == 1);
  REQUIRE(files.count("sensitivity_ranks") == 1);

  const auto table = zrisk::parse_csv(files.at("comparison"), "comparison.csv");
  REQUIRE(table.header.size() == 7);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::string fm = table.rows[i][0];
    CHECK(std::stoi(table.rows[i][2]) == report["comparison"]["rpn"]["rank"][i].get<int>());
    CHECK(std::stoi(table.rows[i][4]) ==
          report["comparison"]["fuzzy-waspas"]["rank"][i].get<int>());
    CHECK(std::stoi(table.rows[i][6]) == report["comparison"]["z-waspas"]["rank"][i].get<int>());
    CHECK(fm == report["comparison"]["failure_modes"][i].get<std::string>());
  }
}

TEST_CASE("write_report covers files and streams") {
  TempDir dir;
  const auto inputs = small_inputs(dir);
  zrisk::AnalysisConfig config;
  const auto report = zrisk::run_analysis(config, inputs);

  const fs::path out = fs::temp_directory_path() / "zrisk_report_out";
  fs::remove_all(out);
  zrisk::write_report(report, zrisk::ReportFormat::csv, out, std::cout);
  CHECK(fs::exists(out / "comparison.csv"));
  CHECK(fs::exists(out / "weights.csv"));
  zrisk::write_report(report, zrisk::ReportFormat::json, out, std::cout);
  CHECK(fs::exists(out / "report.json"));
  fs::remove_all(out);

  std::ostringstream stream;
  zrisk::write_report(report, zrisk::ReportFormat::markdown, "", stream);
  CHECK(stream.str().find("# zrisk report") == 0);
  CHECK_THROWS_AS(zrisk::write_report(report, zrisk::ReportFormat::csv, "", stream),
                  zrisk::validation_error);

  // Unwritable destination: a regular file where the directory should go.
  const fs::path blocker = fs::temp_directory_path() / "zrisk_blocker";
  std::ofstream(blocker) << "x";
  CHECK_THROWS_AS(zrisk::write_report(report, zrisk::ReportFormat::json, blocker, stream),
                  zrisk::validation_error);
  fs::remove(blocker);
}

TEST_CASE("config parsing applies defaults and validates") {
  const auto config = zrisk::parse_config(nlohmann::json::parse(
      R"({"swara_recurrence": "literal", "rounding": 3, "methods": ["z-waspas"]})"));
  CHECK(config.swara_recurrence == zrisk::SwaraRecurrence::literal);
  CHECK(config.rounding == 3);
  CHECK(config.ei_mode == zrisk::EiMode::table);

  CHECK_THROWS_AS(zrisk::parse_config(nlohmann::json::parse(R"({"rounding": -1})")),
                  zrisk::validation_error);
  CHECK_THROWS_AS(zrisk::parse_config(nlohmann::json::parse(R"({"methods": ["nope"]})")),
                  zrisk::validation_error);
  CHECK_THROWS_AS(zrisk::parse_config(nlohmann::json::parse(R"({"tie_tolerance": 0})")),
                  zrisk::validation_error);
  CHECK_THROWS_AS(zrisk::parse_config(nlohmann::json::parse(R"({"swara_recurrence": "x"})")),
                  zrisk::validation_error);
}
