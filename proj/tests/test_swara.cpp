#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "support/generators.hpp"
#include "zrisk/swara.hpp"

using Catch::Approx;
using zrisk::CriterionJudgment;
using zrisk::SwaraRecurrence;
using zrisk::TFN;

namespace {

CriterionJudgment judgment(std::string expert, std::string criterion, int rank,
                           std::string importance = "", std::string reliability = "") {
  CriterionJudgment j;
  j.expert_id = std::move(expert);
  j.criterion_id = std::move(criterion);
  j.rank_position = rank;
  if (!importance.empty()) j.importance_term = importance;
  if (!reliability.empty()) j.reliability_term = reliability;
  return j;
}

}  // namespace

TEST_CASE("aggregate_rankings passes a single expert through") {
  const auto order = zrisk::aggregate_rankings({
      judgment("E1", "C1", 1),
      judgment("E1", "C2", 2, "MOL", "H"),
      judgment("E1", "C3", 3, "LI", "M"),
  });
  CHECK(order == std::vector<std::string>{"C1", "C2", "C3"});
}

TEST_CASE("aggregate_rankings breaks equal mean ranks lexicographically") {
  const auto order = zrisk::aggregate_rankings({
      judgment("E1", "C1", 1),
      judgment("E1", "C2", 2, "LI", "M"),
      judgment("E2", "C2", 1),
      judgment("E2", "C1", 2, "LI", "M"),
  });
  CHECK(order == std::vector<std::string>{"C1", "C2"});
}

TEST_CASE("aggregate_rankings is unanimous on identical orderings") {
  std::vector<CriterionJudgment> judgments;
  for (const auto* expert : {"E1", "E2", "E3"}) {
    judgments.push_back(judgment(expert, "A", 1));
    judgments.push_back(judgment(expert, "B", 2, "MOL", "H"));
    judgments.push_back(judgment(expert, "C", 3, "LI", "M"));
  }
  CHECK(zrisk::aggregate_rankings(judgments) == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("judgment validation rejects malformed sets") {
  CHECK_THROWS_AS(zrisk::aggregate_rankings({}), zrisk::validation_error);
  // Inconsistent criterion sets across experts.
  CHECK_THROWS_WITH(zrisk::aggregate_rankings({
                        judgment("E1", "C1", 1),
                        judgment("E1", "C2", 2, "LI", "M"),
                        judgment("E2", "C1", 1),
                        judgment("E2", "C3", 2, "LI", "M"),
                    }),
                    Catch::Matchers::ContainsSubstring("different criterion sets"));
  // Rank positions not a permutation.
  CHECK_THROWS_AS(zrisk::aggregate_rankings({
                      judgment("E1", "C1", 1),
                      judgment("E1", "C2", 3, "LI", "M"),
                  }),
                  zrisk::validation_error);
  // Terms on the top-ranked criterion.
  CHECK_THROWS_AS(zrisk::aggregate_rankings({
                      judgment("E1", "C1", 1, "EI", "M"),
                      judgment("E1", "C2", 2, "LI", "M"),
                  }),
                  zrisk::validation_error);
  // Missing terms below the top rank.
  CHECK_THROWS_WITH(zrisk::aggregate_rankings({
                        judgment("E1", "C1", 1),
                        judgment("E1", "C2", 2),
                    }),
                    Catch::Matchers::ContainsSubstring("missing importance/reliability"));
}

TEST_CASE("comparative_importance converts and averages expert judgments") {
  SECTION("single expert worked example") {
    const auto terms = zrisk::comparative_importance(
        {judgment("E1", "C1", 1), judgment("E1", "C2", 2, "VLI", "M")}, {"C1", "C2"});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].a() == Approx(0.21).margin(0.005));
    CHECK(terms[0].b() == Approx(0.24).margin(0.005));
    CHECK(terms[0].c() == Approx(0.29).margin(0.005));
  }
  SECTION("identical EI judgments stay (1,1,1) in table mode") {
    const auto terms = zrisk::comparative_importance(
        {judgment("E1", "C1", 1), judgment("E1", "C2", 2, "EI", "H"), judgment("E2", "C1", 1),
         judgment("E2", "C2", 2, "EI", "H")},
        {"C1", "C2"});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == TFN(1, 1, 1));
  }
  SECTION("componentwise mean of two published rows") {
    const auto terms = zrisk::comparative_importance(
        {judgment("E1", "C1", 1), judgment("E1", "C2", 2, "MOL", "H"), judgment("E2", "C1", 1),
         judgment("E2", "C2", 2, "LI", "H")},
        {"C1", "C2"});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].a() == Approx(0.45).margin(0.01));
    CHECK(terms[0].b() == Approx(0.635).margin(0.01));
    CHECK(terms[0].c() == Approx(0.915).margin(0.01));
  }
}

TEST_CASE("swara_coefficients implements both recurrences") {
  SECTION("no lower-ranked criteria") {
    const auto q = zrisk::swara_coefficients({});
    REQUIRE(q.size() == 1);
    CHECK(q[0] == TFN(1, 1, 1));
  }
  SECTION("standard adds one to the divisor") {
    const auto q = zrisk::swara_coefficients({TFN(1, 1, 1)}, SwaraRecurrence::standard);
    REQUIRE(q.size() == 2);
    CHECK(q[1] == TFN(0.5, 0.5, 0.5));
  }
  SECTION("literal divides by the term itself") {
    const auto q = zrisk::swara_coefficients({TFN(0.5, 0.5, 0.5)}, SwaraRecurrence::literal);
    REQUIRE(q.size() == 2);
    CHECK(q[1] == TFN(2, 2, 2));
  }
  SECTION("literal requires strictly positive terms") {
    CHECK_THROWS_AS(zrisk::swara_coefficients({TFN(0.0, 0.1, 0.2)}, SwaraRecurrence::literal),
                    zrisk::validation_error);
  }
}

TEST_CASE("normalize_weights produces fuzzy and crisp weights") {
  SECTION("single criterion") {
    const auto w = zrisk::normalize_weights({TFN(1, 1, 1)});
    CHECK(w.fuzzy_w[0] == TFN(1, 1, 1));
    CHECK(w.crisp[0] == Approx(1.0));
  }
  SECTION("crisp ratios of degenerate TFNs") {
    const auto w = zrisk::normalize_weights({TFN(1, 1, 1), TFN(0.5, 0.5, 0.5)});
    CHECK(w.crisp[0] == Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(w.crisp[1] == Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SECTION("symmetry") {
    const auto w = zrisk::normalize_weights({TFN(1, 1, 1), TFN(1, 1, 1), TFN(1, 1, 1)});
    for (double x : w.crisp) CHECK(x == Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SECTION("degenerate input") {
    CHECK_THROWS_AS(zrisk::normalize_weights({TFN(0, 0, 0)}), zrisk::validation_error);
    CHECK_THROWS_AS(zrisk::normalize_weights({}), zrisk::validation_error);
  }
}

TEST_CASE("property: standard-mode crisp weights are non-increasing and sum to one") {
  zrisk_tests::Gen gen(515);
  for (int trial = 0; trial < 500; ++trial) {
    const int n_criteria = gen.integer(1, 8);
    const int n_experts = gen.integer(1, 5);
    const auto judgments = gen.weighting_judgments(n_criteria, n_experts);
    const auto weights = zrisk::derive_weights(judgments);

    REQUIRE(weights.crisp.size() == static_cast<std::size_t>(n_criteria));
    CHECK(weights.fuzzy_q[0] == TFN(1, 1, 1));
    double sum = 0.0;
    for (std::size_t j = 0; j < weights.crisp.size(); ++j) {
      CHECK(weights.crisp[j] > 0.0);
      sum += weights.crisp[j];
      if (j > 0) CHECK(weights.crisp[j] <= weights.crisp[j - 1] + 1e-12);
    }
    CHECK(sum == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("property: relabeling criteria permutes the output identically") {
  zrisk_tests::Gen gen(616);
  for (int trial = 0; trial < 100; ++trial) {
    const int n_criteria = gen.integer(2, 7);
    const auto judgments = gen.weighting_judgments(n_criteria, gen.integer(1, 4));

    // Order-preserving bijective relabeling, so lexicographic tie-breaks
    // resolve the same way on both sides.
    auto relabel = [&](const std::string& id) { return "X" + id; };
    std::vector<CriterionJudgment> renamed = judgments;
    for (auto& j : renamed) j.criterion_id = relabel(j.criterion_id);

    const auto base = zrisk::derive_weights(judgments);
    const auto mapped = zrisk::derive_weights(renamed);

    std::map<std::string, double> base_by_id, mapped_by_id;
    for (std::size_t i = 0; i < base.criteria.size(); ++i) {
      base_by_id[relabel(base.criteria[i])] = base.crisp[i];
    }
    for (std::size_t i = 0; i < mapped.criteria.size(); ++i) {
      mapped_by_id[mapped.criteria[i]] = mapped.crisp[i];
    }
    CHECK(base_by_id == mapped_by_id);
  }
}

TEST_CASE("literal recurrence inverts the ordering for sub-unit terms") {
  // Documented anomaly of the printed recurrence: dividing by terms < 1 makes
  // lower-ranked criteria heavier.
  const auto judgments = std::vector<CriterionJudgment>{
      judgment("E1", "C1", 1),
      judgment("E1", "C2", 2, "MUL", "VW"),
  };
  const auto standard = zrisk::derive_weights(judgments, SwaraRecurrence::standard);
  const auto literal = zrisk::derive_weights(judgments, SwaraRecurrence::literal);
  CHECK(standard.crisp[0] > standard.crisp[1]);
  CHECK(literal.crisp[0] < literal.crisp[1]);
}
