#ifndef ZRISK_REPORT_HPP_
#define ZRISK_REPORT_HPP_

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zrisk/analysis.hpp"
#include "zrisk/csv.hpp"
#include "zrisk/errors.hpp"
#include "zrisk/util.hpp"

namespace zrisk {

enum class ReportFormat { json, csv, markdown };

[[nodiscard]] inline ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "markdown") return ReportFormat::markdown;
  throw validation_error("unknown report format '" + s + "'; valid: json csv markdown");
}

/// Canonical lossless serialization.
[[nodiscard]] inline std::string emit_json(const Report& report) {
  return report.dump(2) + "\n";
}

namespace detail {

inline int report_rounding(const Report& report) {
  if (report.contains("metadata") && report["metadata"].contains("config") &&
      report["metadata"]["config"].contains("rounding")) {
    return report["metadata"]["config"]["rounding"].get<int>();
  }
  return 2;
}

inline std::string num(double value, int places) { return format_fixed(value, places); }

}  // namespace detail

/// One CSV file per table section, keyed by file stem.
[[nodiscard]] inline std::map<std::string, std::string> emit_csv(const Report& report) {
  std::map<std::string, std::string> files;

  if (report.contains("weights")) {
    const auto& w = report["weights"];
    std::string text = csv_line({"criterion", "fuzzy_q_a", "fuzzy_q_b", "fuzzy_q_c", "fuzzy_w_a",
                                 "fuzzy_w_b", "fuzzy_w_c", "crisp_weight"});
    for (std::size_t i = 0; i < w["criteria"].size(); ++i) {
      std::vector<std::string> fields = {w["criteria"][i].get<std::string>()};
      for (const char* key : {"fuzzy_q", "fuzzy_w"}) {
        for (std::size_t c = 0; c < 3; ++c) {
          std::ostringstream out;
          out << w[key][i][c].get<double>();
          fields.push_back(out.str());
        }
      }
      std::ostringstream crisp;
      crisp << w["crisp"][i].get<double>();
      fields.push_back(crisp.str());
      text += csv_line(fields);
    }
    files["weights"] = text;
  }

  if (report.contains("methods")) {
    const auto& methods = report["methods"];
    if (methods.contains("rpn")) {
      const auto& m = methods["rpn"];
      std::string text = csv_line({"failure_mode", "rpn", "rank"});
      for (std::size_t i = 0; i < m["failure_modes"].size(); ++i) {
        std::ostringstream score;
        score << m["scores"][i].get<double>();
        text += csv_line({m["failure_modes"][i].get<std::string>(), score.str(),
                          std::to_string(m["ranks"][i].get<int>())});
      }
      files["method_rpn"] = text;
    }
    for (const auto& [name, stem] :
         std::vector<std::pair<std::string, std::string>>{{"fuzzy-waspas", "method_fuzzy_waspas"},
                                                          {"z-waspas", "method_z_waspas"}}) {
      if (!methods.contains(name)) continue;
      const auto& m = methods[name];
      std::string text = csv_line({"failure_mode", "q_bar", "p_bar", "k", "rank"});
      for (std::size_t i = 0; i < m["failure_modes"].size(); ++i) {
        std::vector<std::string> fields = {m["failure_modes"][i].get<std::string>()};
        for (const char* key : {"q_bar", "p_bar", "k"}) {
          std::ostringstream out;
          out << m[key][i].get<double>();
          fields.push_back(out.str());
        }
        fields.push_back(std::to_string(m["ranks"][i].get<int>()));
        text += csv_line(fields);
      }
      files[stem] = text;
    }
  }

  if (report.contains("comparison")) {
    const auto& cmp = report["comparison"];
    std::vector<std::string> header = {"failure_mode"};
    if (cmp.contains("rpn")) {
      header.push_back("rpn");
      header.push_back("rpn_rank");
    }
    if (cmp.contains("fuzzy-waspas")) {
      header.push_back("fuzzy_k");
      header.push_back("fuzzy_rank");
    }
    if (cmp.contains("z-waspas")) {
      header.push_back("z_k");
      header.push_back("z_rank");
    }
    std::string text = csv_line(header);
    for (std::size_t i = 0; i < cmp["failure_modes"].size(); ++i) {
      std::vector<std::string> fields = {cmp["failure_modes"][i].get<std::string>()};
      if (cmp.contains("rpn")) {
        std::ostringstream score;
        score << cmp["rpn"]["score"][i].get<double>();
        fields.push_back(score.str());
        fields.push_back(std::to_string(cmp["rpn"]["rank"][i].get<int>()));
      }
      for (const char* name : {"fuzzy-waspas", "z-waspas"}) {
        if (!cmp.contains(name)) continue;
        std::ostringstream k;
        k << cmp[name]["k"][i].get<double>();
        fields.push_back(k.str());
        fields.push_back(std::to_string(cmp[name]["rank"][i].get<int>()));
      }
      text += csv_line(fields);
    }
    files["comparison"] = text;
  }

  if (report.contains("sensitivity")) {
    const auto& sens = report["sensitivity"];
    std::vector<std::string> header = {"failure_mode"};
    for (const auto& c : sens["cases"]) header.push_back(c.get<std::string>());
    std::string text = csv_line(header);
    for (std::size_t i = 0; i < sens["failure_modes"].size(); ++i) {
      std::vector<std::string> fields = {sens["failure_modes"][i].get<std::string>()};
      for (const auto& rank : sens["rank_matrix"][i]) {
        fields.push_back(std::to_string(rank.get<int>()));
      }
      text += csv_line(fields);
    }
    files["sensitivity_ranks"] = text;

    std::string spearman = csv_line({"case_pair", "spearman"});
    for (const auto& [pair, rho] : sens["pairwise_spearman"].items()) {
      std::ostringstream out;
      out << rho.get<double>();
      spearman += csv_line({pair, out.str()});
    }
    files["sensitivity_spearman"] = spearman;
  }

  return files;
}

/// Human-oriented rendering; the comparison block mirrors the published
/// three-method table layout (RPN, Rank, K_i, Rank, K_i, Rank) and the
/// sensitivity block the failure-mode x case rank matrix.
[[nodiscard]] inline std::string emit_markdown(const Report& report) {
  const int places = detail::report_rounding(report);
  std::ostringstream md;
  md << "# zrisk report\n";

  if (report.contains("weights")) {
    const auto& w = report["weights"];
    md << "\n## Criterion weights\n\n";
    md << "| Criterion | Fuzzy weight | Crisp weight |\n";
    md << "| --- | --- | --- |\n";
    for (std::size_t i = 0; i < w["criteria"].size(); ++i) {
      md << "| " << w["criteria"][i].get<std::string>() << " | ("
         << detail::num(w["fuzzy_w"][i][0].get<double>(), places) << ", "
         << detail::num(w["fuzzy_w"][i][1].get<double>(), places) << ", "
         << detail::num(w["fuzzy_w"][i][2].get<double>(), places) << ") | "
         << detail::num(w["crisp"][i].get<double>(), places) << " |\n";
    }
  }

  if (report.contains("comparison")) {
    const auto& cmp = report["comparison"];
    const bool has_rpn = cmp.contains("rpn");
    const bool has_fuzzy = cmp.contains("fuzzy-waspas");
    const bool has_z = cmp.contains("z-waspas");
    md << "\n## Failure-mode comparison\n\n";
    md << "| Failure mode |";
    if (has_rpn) md << " RPN | Rank |";
    if (has_fuzzy) md << " K_i (fuzzy-WASPAS) | Rank |";
    if (has_z) md << " K_i (Z-WASPAS) | Rank |";
    md << "\n| --- |";
    if (has_rpn) md << " --- | --- |";
    if (has_fuzzy) md << " --- | --- |";
    if (has_z) md << " --- | --- |";
    md << "\n";
    for (std::size_t i = 0; i < cmp["failure_modes"].size(); ++i) {
      md << "| " << cmp["failure_modes"][i].get<std::string>() << " |";
      if (has_rpn) {
        md << " " << detail::num(cmp["rpn"]["score"][i].get<double>(), places) << " | "
           << cmp["rpn"]["rank"][i].get<int>() << " |";
      }
      if (has_fuzzy) {
        md << " " << detail::num(cmp["fuzzy-waspas"]["k"][i].get<double>(), places) << " | "
           << cmp["fuzzy-waspas"]["rank"][i].get<int>() << " |";
      }
      if (has_z) {
        md << " " << detail::num(cmp["z-waspas"]["k"][i].get<double>(), places) << " | "
           << cmp["z-waspas"]["rank"][i].get<int>() << " |";
      }
      md << "\n";
    }
    if (cmp.contains("spearman") && !cmp["spearman"].empty()) {
      md << "\nPairwise Spearman rank agreement:\n\n";
      for (const auto& [pair, rho] : cmp["spearman"].items()) {
        md << "- " << pair << ": " << detail::num(rho.get<double>(), 3) << "\n";
      }
    }
  }

  if (report.contains("sensitivity")) {
    const auto& sens = report["sensitivity"];
    md << "\n## Sensitivity (rank per weight case)\n\n";
    md << "| Failure mode |";
    for (const auto& c : sens["cases"]) md << " " << c.get<std::string>() << " |";
    md << "\n| --- |";
    for (std::size_t k = 0; k < sens["cases"].size(); ++k) md << " --- |";
    md << "\n";
    for (std::size_t i = 0; i < sens["failure_modes"].size(); ++i) {
      md << "| " << sens["failure_modes"][i].get<std::string>() << " |";
      for (const auto& rank : sens["rank_matrix"][i]) md << " " << rank.get<int>() << " |";
      md << "\n";
    }
    if (!sens["always_rank_1"].empty()) {
      md << "\nRanked first in every case:";
      for (const auto& id : sens["always_rank_1"]) md << " " << id.get<std::string>();
      md << "\n";
    }
  }

  if (report.contains("warnings") && !report["warnings"].empty()) {
    md << "\n## Warnings\n\n";
    for (const auto& w : report["warnings"]) md << "- " << w.get<std::string>() << "\n";
  }
  return md.str();
}

/// Write the report in the requested format. csv needs a directory; json and
/// markdown write a single file (or stream when `out_dir` is empty).
inline void write_report(const Report& report, ReportFormat format,
                         const std::filesystem::path& out_dir, std::ostream& fallback) {
  auto write_file = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write " + path.string());
    out << text;
    if (!out) throw validation_error("failed while writing " + path.string());
  };

  if (out_dir.empty()) {
    switch (format) {
      case ReportFormat::json: fallback << emit_json(report); return;
      case ReportFormat::markdown: fallback << emit_markdown(report); return;
      case ReportFormat::csv:
        throw validation_error("csv output requires --out DIR (one file per table section)");
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw validation_error("cannot create output directory " + out_dir.string());
  switch (format) {
    case ReportFormat::json:
      write_file(out_dir / "report.json", emit_json(report));
      break;
    case ReportFormat::markdown:
      write_file(out_dir / "report.md", emit_markdown(report));
      break;
    case ReportFormat::csv:
      for (const auto& [stem, text] : emit_csv(report)) {
        write_file(out_dir / (stem + ".csv"), text);
      }
      break;
  }
}

}  // namespace zrisk

#endif  // ZRISK_REPORT_HPP_
