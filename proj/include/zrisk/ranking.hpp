#ifndef ZRISK_RANKING_HPP_
#define ZRISK_RANKING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "zrisk/errors.hpp"

namespace zrisk {

/// Indices of items sharing one score (within tolerance of the group leader).
using TieGroups = std::vector<std::vector<std::size_t>>;

struct RankedScores {
  std::vector<int> ranks;  // competition ranking: ties share the smaller rank
  TieGroups ties;          // only groups of size >= 2, by original index
};

/// Rank scores descending with deterministic tie handling: items within
/// `tolerance` of a group's best score tie and share the group's first rank;
/// the next distinct score resumes at its positional rank. Secondary sort key
/// is `ids` so equal inputs always produce identical output.
[[nodiscard]] inline RankedScores rank_descending(const std::vector<double>& scores,
                                                  const std::vector<std::string>& ids,
                                                  double tolerance) {
  if (scores.size() != ids.size()) {
    throw validation_error("rank_descending: scores and ids differ in length");
  }
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (scores[l] != scores[r]) return scores[l] > scores[r];
    return ids[l] < ids[r];
  });

  RankedScores out;
  out.ranks.assign(n, 0);
  std::size_t pos = 0;
  while (pos < n) {
    const double leader = scores[order[pos]];
    std::size_t end = pos;
    while (end + 1 < n && leader - scores[order[end + 1]] <= tolerance) ++end;
    std::vector<std::size_t> group;
    for (std::size_t k = pos; k <= end; ++k) {
      out.ranks[order[k]] = static_cast<int>(pos) + 1;
      group.push_back(order[k]);
    }
    if (group.size() >= 2) {
      std::sort(group.begin(), group.end());
      out.ties.push_back(std::move(group));
    }
    pos = end + 1;
  }
  return out;
}

/// Mid-ranks of a vector (ascending): tied values share the average of the
/// positions they occupy.
[[nodiscard]] inline std::vector<double> mid_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mid = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

}  // namespace zrisk

#endif  // ZRISK_RANKING_HPP_
