#ifndef ZRISK_SCALES_HPP_
#define ZRISK_SCALES_HPP_

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zrisk/errors.hpp"
#include "zrisk/fuzzy.hpp"

namespace zrisk {

/// Named linguistic scale: an ordered list of (term code, TFN) entries.
struct LinguisticScale {
  std::string name;
  std::vector<std::pair<std::string, TFN>> entries;

  [[nodiscard]] bool contains(const std::string& term) const {
    for (const auto& [code, tfn] : entries) {
      if (code == term) return true;
    }
    return false;
  }

  [[nodiscard]] const TFN& at(const std::string& term) const {
    for (const auto& [code, tfn] : entries) {
      if (code == term) return tfn;
    }
    std::ostringstream out;
    out << "unknown " << name << " term '" << term << "'; valid codes:";
    for (const auto& [code, tfn] : entries) out << ' ' << code;
    throw validation_error(out.str());
  }
};

/// Five-step importance scale used when weighting criteria.
inline const LinguisticScale& weighting_importance_scale() {
  static const LinguisticScale scale{
      "weighting-importance",
      {
          {"EI", TFN(1.0, 1.0, 1.0)},
          {"MOL", TFN(2.0 / 3.0, 1.0, 3.0 / 2.0)},
          {"LI", TFN(2.0 / 5.0, 1.0 / 2.0, 2.0 / 3.0)},
          {"VLI", TFN(2.0 / 7.0, 1.0 / 3.0, 2.0 / 5.0)},
          {"MUL", TFN(2.0 / 9.0, 1.0 / 4.0, 2.0 / 7.0)},
      }};
  return scale;
}

/// Five-step reliability scale shared by weighting and rating judgments.
inline const LinguisticScale& reliability_scale() {
  static const LinguisticScale scale{
      "reliability",
      {
          {"VW", TFN(0.0, 0.0, 0.25)},
          {"W", TFN(0.2, 0.35, 0.5)},
          {"M", TFN(0.35, 0.5, 0.75)},
          {"H", TFN(0.5, 0.75, 0.9)},
          {"VH", TFN(0.75, 1.0, 1.0)},
      }};
  return scale;
}

/// Seven-step scale for rating failure modes against criteria.
inline const LinguisticScale& rating_scale() {
  static const LinguisticScale scale{
      "rating",
      {
          {"VP", TFN(0.0, 1.0, 2.0)},
          {"P", TFN(1.0, 2.0, 3.0)},
          {"MP", TFN(2.0, 3.5, 5.0)},
          {"F", TFN(4.0, 5.0, 6.0)},
          {"MG", TFN(5.0, 6.5, 8.0)},
          {"G", TFN(7.0, 8.0, 9.0)},
          {"VG", TFN(8.0, 9.0, 10.0)},
      }};
  return scale;
}

/// How (EI, *) weighting pairs are handled. The published transformation
/// table pins every EI row to (1,1,1); `computed` applies the sqrt(alpha)
/// weighting uniformly instead.
enum class EiMode { table, computed };

/// Convert a (importance, reliability) weighting judgment to a TFN.
[[nodiscard]] inline TFN weighting_term_to_tfn(const std::string& importance,
                                               const std::string& reliability,
                                               EiMode mode = EiMode::table) {
  const TFN& f = weighting_importance_scale().at(importance);
  const TFN& l = reliability_scale().at(reliability);
  if (mode == EiMode::table && importance == "EI") {
    return TFN(1.0, 1.0, 1.0);
  }
  return z_to_tfn(ZNumber(f, l));
}

/// Convert a (rating, reliability) judgment to a TFN. No special cases.
[[nodiscard]] inline TFN rating_term_to_tfn(const std::string& rating,
                                            const std::string& reliability) {
  const TFN& f = rating_scale().at(rating);
  const TFN& l = reliability_scale().at(reliability);
  return z_to_tfn(ZNumber(f, l));
}

}  // namespace zrisk

#endif  // ZRISK_SCALES_HPP_
