#include <doctest.h>

#include "lambdak/classify.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

TEST_CASE("positive roots by reflection closure") {
  CHECK(positive_roots(parse_dynkin("A2")).size() == 3);
  CHECK(positive_roots(parse_dynkin("A4")).size() == 10);
  CHECK(positive_roots(parse_dynkin("D4")).size() == 12);
  CHECK(positive_roots(parse_dynkin("D5")).size() == 20);
  CHECK(positive_roots(parse_dynkin("E6")).size() == 36);
  CHECK(positive_roots(parse_dynkin("E7")).size() == 63);
  CHECK(positive_roots(parse_dynkin("E8")).size() == 120);
  CHECK_THROWS_AS(parse_dynkin("D3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dynkin("E9"), std::invalid_argument);
}

TEST_CASE("closed form and orbit counts") {
  CHECK(s_count(1) == 2);
  CHECK(s_count(2) == 5);
  CHECK(s_count(5) == 50);
  CHECK_THROWS_AS(s_count(6), std::domain_error);
  CHECK(orbit_count(parse_dynkin("D4"), 3, 2) == 10);
  CHECK(orbit_count(parse_dynkin("E8"), 5, 2) == 50);
  CHECK(orbit_count(parse_dynkin("E6"), 3, 3) == 27);
  CHECK_THROWS_AS(orbit_count(parse_dynkin("A2"), 4, 2), std::domain_error);
}

TEST_CASE("classification verdicts") {
  auto r = classify(parse_dynkin("A2"), 5);
  CHECK(r.verdict == CMVerdict::finite);
  CHECK(r.count == std::optional<std::size_t>{50});
  auto r6 = classify(parse_dynkin("A2"), 6);
  CHECK(r6.verdict == CMVerdict::infinite);
  CHECK(r6.tubular == std::optional<std::array<int, 3>>{{2, 3, 6}});
  CHECK(classify(parse_dynkin("A3"), 3).verdict == CMVerdict::finite);
  CHECK(classify(parse_dynkin("D4"), 2).count == std::optional<std::size_t>{16});
  CHECK(classify(parse_dynkin("A2"), 7).verdict == CMVerdict::infinite);
  CHECK(tubular_boundary(parse_dynkin("A3"), 4) == std::optional<std::array<int, 3>>{{2, 4, 4}});
  CHECK(!tubular_boundary(parse_dynkin("A2"), 3));
}

TEST_CASE("type detection from presentations") {
  CHECK(detect_dynkin(load("ka2.q")) == std::optional<DynkinType>{DynkinType{'A', 2}});
  CHECK(detect_dynkin(load("ka4.q")) == std::optional<DynkinType>{DynkinType{'A', 4}});
  CHECK(detect_dynkin(load("kd4.q")) == std::optional<DynkinType>{DynkinType{'D', 4}});
  CHECK(!detect_dynkin(load("sec5_3_tilted.q")));
  CHECK(classify(load("sec5_3_tilted.q"), 2).verdict == CMVerdict::unknown);
  CHECK(classify(load("ka3.q"), 3).count == std::optional<std::size_t>{27});
}
