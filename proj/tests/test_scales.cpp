#include <catch2/catch_amalgamated.hpp>

#include "support/table_fixtures.hpp"
#include "zrisk/scales.hpp"
#include "zrisk/util.hpp"

using Catch::Approx;
using zrisk::EiMode;
using zrisk::TFN;

TEST_CASE("scales contain exactly the published terms") {
  const auto& weighting = zrisk::weighting_importance_scale();
  REQUIRE(weighting.entries.size() == 5);
  CHECK(weighting.at("EI") == TFN(1, 1, 1));
  CHECK(weighting.at("MUL") == TFN(2.0 / 9.0, 0.25, 2.0 / 7.0));

  const auto& reliability = zrisk::reliability_scale();
  REQUIRE(reliability.entries.size() == 5);
  CHECK(reliability.at("VW") == TFN(0, 0, 0.25));
  CHECK(reliability.at("VH") == TFN(0.75, 1, 1));

  const auto& rating = zrisk::rating_scale();
  REQUIRE(rating.entries.size() == 7);
  CHECK(rating.at("MP") == TFN(2, 3.5, 5));
  CHECK(rating.at("VG") == TFN(8, 9, 10));
}

TEST_CASE("unknown terms raise errors listing the valid codes") {
  CHECK_THROWS_WITH(zrisk::rating_scale().at("XX"),
                    Catch::Matchers::ContainsSubstring("XX") &&
                        Catch::Matchers::ContainsSubstring("VP") &&
                        Catch::Matchers::ContainsSubstring("VG"));
  CHECK_THROWS_AS(zrisk::weighting_term_to_tfn("nope", "M"), zrisk::validation_error);
  CHECK_THROWS_AS(zrisk::rating_term_to_tfn("G", "nope"), zrisk::validation_error);
}

TEST_CASE("weighting conversions reproduce the published table") {
  for (const auto& row : zrisk_tests::weighting_transformation_table()) {
    CAPTURE(row.first_term, row.reliability_term);
    const TFN got = zrisk::weighting_term_to_tfn(row.first_term, row.reliability_term);
    CHECK(zrisk::round_half_up(got.a(), 2) == Approx(row.tfn[0]).margin(0.01));
    CHECK(zrisk::round_half_up(got.b(), 2) == Approx(row.tfn[1]).margin(0.01));
    CHECK(zrisk::round_half_up(got.c(), 2) == Approx(row.tfn[2]).margin(0.01));
  }
}

TEST_CASE("every (EI, *) pair is pinned to (1,1,1) in table mode") {
  for (const auto& [code, tfn] : zrisk::reliability_scale().entries) {
    CHECK(zrisk::weighting_term_to_tfn("EI", code, EiMode::table) == TFN(1, 1, 1));
  }
}

TEST_CASE("computed mode applies the sqrt-alpha weighting to EI as well") {
  const TFN got = zrisk::weighting_term_to_tfn("EI", "VW", EiMode::computed);
  const double expected = std::sqrt(0.25 / 3.0);
  CHECK(got.a() == Approx(expected).epsilon(1e-12));
  CHECK(got.b() == Approx(expected).epsilon(1e-12));
  CHECK(got.c() == Approx(expected).epsilon(1e-12));
  // Non-EI pairs are unaffected by the mode switch.
  CHECK(zrisk::weighting_term_to_tfn("LI", "M", EiMode::computed) ==
        zrisk::weighting_term_to_tfn("LI", "M", EiMode::table));
}

TEST_CASE("rating conversions reproduce the published table") {
  for (const auto& row : zrisk_tests::rating_transformation_table()) {
    CAPTURE(row.first_term, row.reliability_term);
    const TFN got = zrisk::rating_term_to_tfn(row.first_term, row.reliability_term);
    CHECK(zrisk::round_half_up(got.a(), 2) == Approx(row.tfn[0]).margin(0.01));
    CHECK(zrisk::round_half_up(got.b(), 2) == Approx(row.tfn[1]).margin(0.01));
    CHECK(zrisk::round_half_up(got.c(), 2) == Approx(row.tfn[2]).margin(0.01));
  }
}

TEST_CASE("(MP, W) resolves to the table value, not the in-text variant") {
  // The text prints 2.08 for the middle component; the table and the formula
  // agree on 2.07.
  const TFN got = zrisk::rating_term_to_tfn("MP", "W");
  CHECK(zrisk::round_half_up(got.a(), 2) == Approx(1.18));
  CHECK(zrisk::round_half_up(got.b(), 2) == Approx(2.07));
  CHECK(zrisk::round_half_up(got.c(), 2) == Approx(2.96));
}

TEST_CASE("round_half_up behaves as documented") {
  CHECK(zrisk::round_half_up(0.125, 2) == Approx(0.13));
  CHECK(zrisk::round_half_up(0.124, 2) == Approx(0.12));
  CHECK(zrisk::round_half_up(2.0706, 2) == Approx(2.07));
  CHECK(zrisk::format_fixed(1.0954, 2) == "1.10");
}
