#include <doctest.h>

#include <random>

#include "lambdak/ar.hpp"
#include "lambdak/decompose.hpp"
#include "lambdak/gorenstein.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

namespace {

AlgebraPtr truncated(std::size_t n) { return BoundQuiverAlgebra::build(truncated_polynomial(n)); }

}  // namespace

TEST_CASE("transpose and translate over KA2") {
  auto a = algebra("ka2.q");
  CHECK(transpose_tr(projective_module(a, 0)).is_zero());
  auto s1 = simple_module(a, 0);
  auto tr = transpose_tr(s1);
  CHECK(tr.algebra == a->opposite());
  CHECK(tr.total_dim() == 1);
  auto trtr = transpose_tr(tr);
  CHECK(is_isomorphic(trtr, s1).has_value());
  CHECK(is_isomorphic(tau(s1), simple_module(a, 1)).has_value());
  CHECK(is_isomorphic(tau_inverse(simple_module(a, 1)), s1).has_value());
  CHECK_THROWS_AS(tau(projective_module(a, 1)), std::invalid_argument);
}

TEST_CASE("translate over truncated polynomial rings") {
  auto r2 = truncated(2);
  auto k = simple_module(r2, 0);
  CHECK(is_isomorphic(tau(k), k).has_value());
}

TEST_CASE("almost split sequences: small examples") {
  auto a = algebra("ka2.q");
  auto s = almost_split_sequence(simple_module(a, 0));
  CHECK(check_sequence(s).ok());
  CHECK(is_isomorphic(s.middle, projective_module(a, 0)).has_value());

  auto r3 = truncated(3);
  auto k3 = simple_module(r3, 0);
  auto s3 = almost_split_sequence(k3);
  CHECK(check_sequence(s3).ok());
  CHECK(s3.middle.total_dim() == 2);
  CHECK(is_indecomposable(s3.middle));

  auto r2 = truncated(2);
  auto s2 = almost_split_sequence(simple_module(r2, 0));
  CHECK(check_sequence(s2).ok());
  CHECK(is_isomorphic(s2.middle, regular_module(r2)).has_value());
}

TEST_CASE("stable Hom") {
  auto r2 = truncated(2);
  auto k = simple_module(r2, 0);
  auto sh = stable_hom(k, k);
  CHECK(sh.hom_dim == 1);
  CHECK(sh.dim == 1);
  CHECK(stable_hom(regular_module(r2), k).dim == 0);
  CHECK(stable_hom(k, regular_module(r2)).hom_dim == 1);
  CHECK(stable_hom(k, regular_module(r2)).dim == 0);
  auto a = algebra("ka2.q");
  CHECK(stable_hom(simple_module(a, 0), simple_module(a, 0)).dim == 1);
  CHECK(stable_hom(projective_module(a, 0), simple_module(a, 0)).dim == 0);
}

TEST_CASE("knitting over R_k and small Lambda_k") {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto q = knit_gproj(truncated(k));
    CHECK(q.closed);
    CHECK(q.nodes.size() == k);
  }
  const std::size_t expected[] = {0, 2, 5, 10};
  for (std::size_t k = 1; k <= 3; ++k) {
    auto q = knit_gproj(lambda_k("ka2.q", k));
    CHECK(q.closed);
    CHECK(q.nodes.size() == expected[k]);
    CHECK(q.diagnostics.empty());
  }
}

TEST_CASE("irreducible maps agree with middle terms") {
  auto q = knit_gproj(algebra("ka2.q"));
  REQUIRE(q.nodes.size() == 2);
  auto counts = irreducible_map_counts(q);
  CHECK(counts.size() == 1);

  auto r3 = knit_gproj(truncated(3));
  auto c3 = irreducible_map_counts(r3);
  CHECK(c3 == r3.arrows);
  CHECK(c3.size() == 4);

  auto l3 = knit_gproj(lambda_k("ka2.q", 3));
  CHECK(irreducible_map_counts(l3) == l3.arrows);
  CHECK(syzygy_permutation(l3).has_value());
  CHECK(to_dot(l3).find("digraph") == 0);
}
