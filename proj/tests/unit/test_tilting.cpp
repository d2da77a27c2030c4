#include <doctest.h>

#include <random>

#include "lambdak/decompose.hpp"
#include "lambdak/tilting.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

TEST_CASE("tilting candidate shape") {
  auto t1 = build_T(load("ka2.q"), 1);
  CHECK(t1.summands.empty());
  CHECK(t1.total.is_zero());

  auto t2 = build_T(load("ka2.q"), 2);
  REQUIRE(t2.summands.size() == 1);
  CHECK(t2.total.support() == std::optional<std::pair<int, int>>{{0, 0}});
  CHECK(t2.total.total_dim() == 3);
  CHECK(t2.gorenstein_projective);

  auto t3 = build_T(load("ka2.q"), 3);
  REQUIRE(t3.summands.size() == 2);
  CHECK(t3.summands[0].total_dim() == 3);
  CHECK(t3.summands[1].total_dim() == 6);
  CHECK(t3.summands[1].support() == std::optional<std::pair<int, int>>{{-1, 0}});
  CHECK(t3.pieces.size() == 4);
  CHECK(t3.gorenstein_projective);
}

TEST_CASE("degree-zero endomorphisms against the triangular algebra") {
  auto e2 = end_degree_zero(build_T(load("ka2.q"), 2));
  CHECK(e2.ok());
  CHECK(e2.dim == 3);
  auto e3 = end_degree_zero(build_T(load("ka2.q"), 3));
  CHECK(e3.ok());
  CHECK(e3.dim == 9);
  CHECK(e3.arrow_images.size() == 4);
  CHECK(end_degree_zero(build_T(load("ka3.q"), 3)).ok());
}

TEST_CASE("syzygy period") {
  for (std::size_t k = 2; k <= 3; ++k) CHECK(verify_syzygy_period(build_T(load("ka2.q"), k)).ok());
  CHECK(verify_syzygy_period(build_T(load("ka3.q"), 3)).ok());

  // Negative control: Omega^2 T is not T shifted by one less.
  auto t = build_T(load("ka2.q"), 3);
  std::mt19937_64 rng(5);
  auto o2 = graded_syzygy(t.total, 2);
  CHECK(!graded_is_isomorphic(o2, grade_shift(t.total, -2), rng).has_value());
  CHECK(graded_is_isomorphic(o2, grade_shift(t.total, -3), rng).has_value());
}

TEST_CASE("stable Hom into suspensions") {
  auto h = verify_hom_vanishing(build_T(load("ka2.q"), 3), 2);
  CHECK(h.ok());
  REQUIRE(h.dims.size() == 5);
  CHECK(h.dims[2] == std::pair<int, std::size_t>{0, 9});
  auto h2 = verify_hom_vanishing(build_T(load("kd4.q"), 2), 1);
  CHECK(h2.ok());

  // Negative control: a module with self-extensions in the stable category.
  auto a = lambda_k("ka2.q", 2);
  auto lam = truncate(graded_regular(a), 0, TruncationSide::at_most);
  auto x = graded_direct_sum({lam, grade_shift(lam, 1)});
  CHECK(graded_stable_hom_dim(x, graded_suspension(x, 1)) > 0);
}

TEST_CASE("short exact sequences between T and M") {
  auto s2 = verify_exact_sequences(load("ka2.q"), 2);
  CHECK(s2.ok());
  CHECK(s2.m_dims == "-1:(1,2)");
  auto s3 = verify_exact_sequences(load("ka2.q"), 3);
  CHECK(s3.ok());
  CHECK(s3.dim_m == 9);
  CHECK_THROWS_AS(verify_exact_sequences(load("ka2.q"), 1), std::invalid_argument);
}
