#include <doctest.h>

#include <random>

#include "lambdak/decompose.hpp"
#include "lambdak/gorenstein.hpp"
#include "lambdak/graded.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

namespace {

// Lambda_k(i)_{<=0}.
GradedModule truncated_shift(const AlgebraPtr& a, int i) {
  return truncate(grade_shift(graded_regular(a), i), 0, TruncationSide::at_most);
}

}  // namespace

TEST_CASE("graded regular module and covering algebra") {
  auto a = lambda_k("ka2.q", 3);
  auto r = graded_regular(a);
  CHECK(check_representation(r.rep).empty());
  CHECK(r.total_dim() == a->dim());
  CHECK(r.support() == std::optional<std::pair<int, int>>{{0, 2}});
  CHECK(a->gorenstein_parameter() == std::optional<int>{2});
  for (std::size_t v = 0; v < 2; ++v) CHECK(graded_projective(a, v).total_dim() == a->starting_at(v).size());
}

TEST_CASE("grade shift") {
  auto a = lambda_k("ka2.q", 2);
  auto x = graded_regular(a);
  auto s = grade_shift(x, 0);
  CHECK(s.lo == x.lo);
  auto xi_j = grade_shift(grade_shift(x, 2), -5);
  auto x_ij = grade_shift(x, -3);
  CHECK(xi_j.lo == x_ij.lo);
  CHECK(xi_j.rep.arrows == x_ij.rep.arrows);
  CHECK(grade_shift(x, 1).support() == std::optional<std::pair<int, int>>{{-1, 0}});
}

TEST_CASE("truncation") {
  auto a = lambda_k("ka2.q", 3);
  auto t = truncated_shift(a, 1);
  CHECK(t.support() == std::optional<std::pair<int, int>>{{-1, 0}});
  CHECK(t.total_dim() == 6);
  auto x = grade_shift(graded_regular(a), 1);
  for (int i = -2; i <= 2; ++i) {
    auto inc = truncation_map(x, i + 1, TruncationSide::at_least);
    auto proj = truncation_map(x, i, TruncationSide::at_most);
    CHECK(is_graded_homomorphism(inc));
    CHECK(is_graded_homomorphism(proj));
    CHECK(is_injective(inc.map, inc.source.rep));
    CHECK(is_surjective(proj.map, proj.target.rep));
    CHECK(is_zero_map(compose(proj.map, inc.map)));
    CHECK(inc.source.total_dim() + proj.target.total_dim() == x.total_dim());
  }
  // Concentrated in degree 0: the truncation at or below 0 is the module itself.
  auto s = graded_simple(a, 0, 0);
  CHECK(truncate(s, 0, TruncationSide::at_most).total_dim() == 1);
  // Lambda_k(i)_{<=0} is projective once i >= k - 1.
  CHECK(!graded_is_projective(truncated_shift(a, 1)));
  CHECK(graded_is_projective(truncated_shift(a, 2)));
  CHECK(graded_is_projective(truncated_shift(a, 3)));
}

TEST_CASE("forgetful functors") {
  auto a = lambda_k("ka2.q", 2);
  auto s = forget(graded_simple(a, 1, 4), 1);
  CHECK(s.algebra == a);
  CHECK(is_isomorphic(s, simple_module(a, 1)).has_value());
  auto x = grade_shift(graded_regular(a), 1);
  auto fx = forget(x, 1);
  CHECK(check_representation(fx).empty());
  CHECK(is_isomorphic(fx, regular_module(a)).has_value());
  CHECK(forget(grade_shift(x, 3), 1).arrows == fx.arrows);
  for (std::size_t m = 2; m <= 3; ++m) {
    auto fm = forget(x, m);
    CHECK(check_representation(fm).empty());
    CHECK(fm.total_dim() == x.total_dim());
  }
}

TEST_CASE("Hom decomposition under the forgetful functors") {
  auto a = lambda_k("ka2.q", 2);
  std::mt19937_64 rng(11);
  std::vector<GradedModule> mods = {graded_regular(a), truncate(graded_regular(a), 0, TruncationSide::at_most),
                                    graded_simple(a, 0, 0), grade_shift(graded_projective(a, 0), 1),
                                    truncate(graded_projective(a, 0), 1, TruncationSide::at_least)};
  for (const auto& x : mods)
    for (const auto& y : mods)
      for (std::size_t m = 1; m <= 3; ++m) {
        std::size_t total = 0;
        for (int i = -6; i <= 6; ++i)
          if (i % static_cast<int>(m) == 0) total += graded_hom_dim(x, grade_shift(y, i));
        CHECK(hom_dim(forget(x, m), forget(y, m)) == total);
      }
}

TEST_CASE("graded syzygies and cosyzygies") {
  auto a = lambda_k("ka2.q", 2);
  std::mt19937_64 rng(3);
  auto lam = truncate(graded_regular(a), 0, TruncationSide::at_most);
  auto o1 = graded_syzygy(lam);
  CHECK(graded_is_isomorphic(o1, grade_shift(lam, -1), rng).has_value());
  auto o2 = graded_syzygy(lam, 2);
  CHECK(graded_is_isomorphic(o2, grade_shift(lam, -2), rng).has_value());
  auto sigma = graded_cosyzygy(lam);
  CHECK(graded_is_isomorphic(sigma, grade_shift(lam, 1), rng).has_value());
  CHECK(graded_is_isomorphic(graded_syzygy(sigma), lam, rng).has_value());
  CHECK(graded_cosyzygy(graded_regular(a)).is_zero());
  CHECK(graded_stable_hom_dim(lam, lam) == 3);
  CHECK(graded_stable_hom_dim(graded_regular(a), lam) == 0);
  CHECK(graded_stable_hom_dim(lam, graded_suspension(lam, 1)) == 0);
}
