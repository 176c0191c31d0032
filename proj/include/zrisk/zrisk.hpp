#ifndef ZRISK_ZRISK_HPP_
#define ZRISK_ZRISK_HPP_

// Umbrella header for the failure-mode prioritization toolkit.

#include "zrisk/analysis.hpp"
#include "zrisk/csv.hpp"
#include "zrisk/errors.hpp"
#include "zrisk/fmea.hpp"
#include "zrisk/fuzzy.hpp"
#include "zrisk/io.hpp"
#include "zrisk/ranking.hpp"
#include "zrisk/report.hpp"
#include "zrisk/scales.hpp"
#include "zrisk/sensitivity.hpp"
#include "zrisk/survey_stats.hpp"
#include "zrisk/swara.hpp"
#include "zrisk/util.hpp"
#include "zrisk/waspas.hpp"

#endif  // ZRISK_ZRISK_HPP_
