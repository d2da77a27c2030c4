#include <doctest.h>

#include <random>

#include "lambdak/decompose.hpp"
#include "lambdak/gorenstein.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

namespace {

AlgebraPtr truncated(std::size_t n) { return BoundQuiverAlgebra::build(truncated_polynomial(n)); }

}  // namespace

TEST_CASE("ext against the regular module") {
  auto a = algebra("ka2.q");
  CHECK(ext_dims(projective_module(a, 0), 3).vanishes());
  auto e = ext_dims(simple_module(a, 0), 2);
  REQUIRE(e.dims.size() == 2);
  CHECK(e.dims[0] == 1);
  CHECK(e.dims[1] == 0);

  std::mt19937_64 rng(2);
  auto r3 = truncated(3);
  for (int t = 0; t < 5; ++t) CHECK(ext_dims(random_cokernel(r3, {0, 0}, {0, 0}, rng), 3).vanishes());
}

TEST_CASE("Gorenstein dimension") {
  auto r = truncated(3);
  CHECK(gorenstein_dimension(r).dimension() == std::optional<std::size_t>{0});
  auto l2 = lambda_k("ka2.q", 2);
  auto c = gorenstein_dimension(l2);
  CHECK(c.sides_agree());
  CHECK(c.dimension() == std::optional<std::size_t>{1});
  auto tilted = algebra("sec5_3_tilted.q");
  CHECK(global_dimension(tilted) == std::optional<std::size_t>{2});
  CHECK(gorenstein_dimension(lambda_k("sec5_3_tilted.q", 2)).dimension() == std::optional<std::size_t>{2});
  CHECK(global_dimension(r) == std::nullopt);
}

TEST_CASE("GP tests on small examples") {
  auto a = lambda_k("ka2.q", 2);
  for (std::size_t i = 0; i < 2; ++i) {
    auto v = is_gorenstein_projective(projective_module(a, i), GpMethod::all);
    CHECK(v.gorenstein_projective);
    CHECK(v.agree());
    CHECK(v.restriction.has_value());
    CHECK(v.monic.has_value());
  }
  auto s = is_gorenstein_projective(simple_module(a, 0), GpMethod::all);
  CHECK(!s.gorenstein_projective);
  CHECK(s.ext == std::optional<bool>{false});
  CHECK(s.restriction == std::optional<bool>{false});
  CHECK(s.monic == std::optional<bool>{false});

  // R_2 -> R_2 along the identity: the projective P(1).
  auto p = projective_module(a, 0);
  CHECK(p.dims == std::vector<std::size_t>{2, 2});
  CHECK(is_gorenstein_projective(p, GpMethod::monic).gorenstein_projective);

  CHECK_THROWS_AS(is_gorenstein_projective(simple_module(algebra("ka2.q"), 0), GpMethod::restriction),
                  std::invalid_argument);
}

TEST_CASE("GP cosyzygy") {
  auto r2 = truncated(2);
  auto k = simple_module(r2, 0);
  auto sk = gp_cosyzygy(k);
  CHECK(is_isomorphic(sk, k).has_value());
  auto a = lambda_k("ka2.q", 2);
  CHECK(gp_cosyzygy(projective_module(a, 0)).is_zero());
  CHECK_THROWS_AS(gp_cosyzygy(simple_module(a, 0)), std::domain_error);

  // The Frobenius structure: Omega(Sigma M) = M for GP M without projective summands.
  auto m = syzygy(simple_module(a, 0));
  REQUIRE(is_gorenstein_projective(m).gorenstein_projective);
  REQUIRE(!is_projective(m));
  auto sigma = gp_cosyzygy(m);
  CHECK(is_gorenstein_projective(sigma).gorenstein_projective);
  CHECK(is_isomorphic(syzygy(sigma), m).has_value());
}

TEST_CASE("star duality on GP modules") {
  auto a = lambda_k("ka3.q", 2);
  auto m = syzygy(simple_module(a, 1));
  auto s = star_dual(m);
  CHECK(s.module.algebra == a->opposite());
  CHECK(check_representation(s.module).empty());
  auto ss = star_dual(s.module);
  CHECK(ss.module.algebra == a);
  CHECK(is_isomorphic(ss.module, m).has_value());
  // P(i)* = P^op(i).
  CHECK(is_isomorphic(star_dual(projective_module(a, 2)).module, projective_module(a->opposite(), 2)).has_value());
}
