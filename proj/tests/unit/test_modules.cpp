#include <doctest.h>

#include <random>

#include "lambdak/decompose.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

namespace {

// K[x]/(x^n) as a one-vertex algebra.
AlgebraPtr truncated(std::size_t n) { return BoundQuiverAlgebra::build(truncated_polynomial(n)); }

std::size_t count_with_dims(const std::vector<Summand>& parts, const std::vector<std::size_t>& dims) {
  std::size_t c = 0;
  for (const auto& s : parts) c += s.module.dims == dims;
  return c;
}

}  // namespace

TEST_CASE("standard modules over KA2") {
  auto a = algebra("ka2.q");
  CHECK(projective_module(a, 0).dims == std::vector<std::size_t>{1, 1});
  CHECK(projective_module(a, 1).dims == std::vector<std::size_t>{0, 1});
  CHECK(injective_module(a, 0).dims == std::vector<std::size_t>{1, 0});
  CHECK(injective_module(a, 1).dims == std::vector<std::size_t>{1, 1});
  CHECK(simple_module(a, 0).dims == std::vector<std::size_t>{1, 0});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(check_representation(projective_module(a, i)).empty());
    CHECK(check_representation(injective_module(a, i)).empty());
  }
}

TEST_CASE("hom dimensions over KA2") {
  auto a = algebra("ka2.q");
  auto s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  auto p1 = projective_module(a, 0), p2 = projective_module(a, 1);
  CHECK(hom_dim(s1, s2) == 0);
  CHECK(hom_dim(s2, s1) == 0);
  CHECK(hom_dim(p1, p1) == 1);
  CHECK(hom_dim(p2, p1) == 1);
  CHECK(hom_dim(p1, p2) == 0);
  CHECK(hom_dim(p1, s1) == 1);
  for (const auto& f : hom_space(p2, p1)) CHECK(is_homomorphism(p2, p1, f));
}

TEST_CASE("Yoneda: dim Hom(P(i), M) = dim M_i") {
  std::mt19937_64 rng(7);
  for (auto name : {"ka3.q", "kd4.q"}) {
    auto a = lambda_k(name, 2);
    for (int trial = 0; trial < 3; ++trial) {
      auto m = random_cokernel(a, {0, 1}, {0, a->num_vertices() - 1}, rng);
      for (std::size_t i = 0; i < a->num_vertices(); ++i) CHECK(hom_dim(projective_module(a, i), m) == m.dims[i]);
    }
  }
}

TEST_CASE("decompose the regular module of KA2") {
  auto a = algebra("ka2.q");
  auto parts = decompose(regular_module(a), 3);
  REQUIRE(parts.size() == 2);
  CHECK(count_with_dims(parts, {1, 1}) == 1);
  CHECK(count_with_dims(parts, {0, 1}) == 1);
  for (const auto& s : parts) {
    CHECK(s.absolutely_indecomposable);
    CHECK(is_homomorphism(s.module, regular_module(a), s.inclusion));
    CHECK(is_invertible(compose(s.projection, s.inclusion)));
  }
}

TEST_CASE("multiplicities are grouped") {
  auto a = algebra("ka2.q");
  auto s1 = simple_module(a, 0);
  std::mt19937_64 rng(1);
  auto classes = decompose_grouped(direct_sum(s1, s1), rng);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].multiplicity == 2);
}

TEST_CASE("decomposition survives a random change of basis") {
  std::mt19937_64 rng(11);
  auto a = lambda_k("ka3.q", 2);
  auto m = direct_sum(direct_sum(projective_module(a, 0), simple_module(a, 2)), injective_module(a, 1));
  auto [twisted, iso] = random_base_change(m, rng);
  CHECK(is_homomorphism(m, twisted, iso));
  auto parts = decompose(twisted, rng);
  CHECK(parts.size() == 3);
  for (const auto& s : parts) CHECK(is_indecomposable(s.module));
  CHECK(is_isomorphic(m, twisted, rng).has_value());
}

TEST_CASE("isomorphism tests") {
  auto a = lambda_k("ka2.q", 2);
  auto p = projective_module(a, 0);
  auto i = injective_module(a, 0);
  CHECK(!is_isomorphic(simple_module(a, 0), simple_module(a, 1)).has_value());
  std::mt19937_64 rng(5);
  auto [q, f] = random_base_change(p, rng);
  auto cert = isomorphic_indecomposables(p, q);
  REQUIRE(cert.has_value());
  CHECK(is_invertible(*cert));
  CHECK(is_homomorphism(p, q, *cert));
  if (p.dims == i.dims) CHECK(is_isomorphic(p, i).has_value() == (hom_dim(p, i) > 0 && is_indecomposable(i)));
}

TEST_CASE("decomposition requires large characteristic") {
  auto pres = load("ka2.q");
  pres.field.characteristic = 3;
  auto a = BoundQuiverAlgebra::build(pres);
  auto m = regular_module(a);
  CHECK_THROWS_AS(decompose(m), std::domain_error);
}

TEST_CASE("syzygies and covers") {
  auto a = algebra("ka2.q");
  auto s1 = simple_module(a, 0);
  auto omega = syzygy(s1);
  CHECK(omega.dims == std::vector<std::size_t>{0, 1});
  CHECK(is_isomorphic(omega, simple_module(a, 1)).has_value());
  CHECK(is_projective(projective_module(a, 0)));
  CHECK(!is_projective(s1));
  CHECK(projective_dimension(s1, 5) == std::optional<std::size_t>{1});

  auto r2 = truncated(2);
  auto k = simple_module(r2, 0);
  auto ok = syzygy(k);
  CHECK(ok.dims == std::vector<std::size_t>{1});
  CHECK(is_isomorphic(ok, k).has_value());
  CHECK(!projective_dimension(k, 6).has_value());

  auto cover = projective_cover(injective_module(a, 1));
  CHECK(is_surjective(cover.surjection, injective_module(a, 1)));
  CHECK(cover.gen_vertices == std::vector<std::size_t>{0});
}

TEST_CASE("duality is an involution") {
  std::mt19937_64 rng(3);
  auto a = lambda_k("ka3.q", 2);
  auto m = random_cokernel(a, {1}, {0, 2}, rng);
  auto dm = dualize(m);
  CHECK(dm.algebra == a->opposite());
  CHECK(check_representation(dm).empty());
  auto ddm = dualize(dm);
  CHECK(ddm.algebra == a);
  CHECK(is_isomorphic(m, ddm).has_value());
  CHECK(is_isomorphic(dualize(projective_module(a, 1)), injective_module(a->opposite(), 1)).has_value());
}

TEST_CASE("restriction to the base algebra") {
  auto a = lambda_k("ka2.q", 2);
  auto base = base_algebra(a);
  auto r = restrict_to_base(projective_module(a, 0));
  CHECK(r.algebra == base);
  auto p = projective_module(base, 0);
  CHECK(is_isomorphic(r, direct_sum(p, p)).has_value());
  CHECK(is_projective(r));
}

TEST_CASE("kernels, cokernels, images") {
  auto a = algebra("ka2.q");
  auto p1 = projective_module(a, 0), p2 = projective_module(a, 1);
  auto h = hom_space(p2, p1);
  REQUIRE(h.size() == 1);
  CHECK(is_injective(h[0], p2));
  CHECK(cokernel(h[0], p1).module.dims == std::vector<std::size_t>{1, 0});
  CHECK(kernel(h[0], p2).module.is_zero());
  CHECK(image(h[0], p1).module.dims == std::vector<std::size_t>{0, 1});
}
