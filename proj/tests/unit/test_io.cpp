#include <doctest.h>

#include <random>

#include "lambdak/decompose.hpp"
#include "lambdak/io.hpp"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

TEST_CASE("module JSON round trip") {
  auto a = lambda_k("ka2.q", 3);
  std::mt19937_64 rng(9);
  auto m = random_cokernel(a, {0, 1}, {0, 1}, rng);
  auto j = to_json(m);
  auto back = module_from_json(Json::parse(j.dump()), a);
  CHECK(back.dims == m.dims);
  CHECK(back.arrows == m.arrows);
  auto fresh = module_from_json(Json::parse(j.dump()));
  CHECK(fresh.algebra != a);
  CHECK(fresh.algebra->dim() == a->dim());
  CHECK(fresh.algebra->presentation().loop_shape.has_value());
  CHECK(to_json(fresh).dump() == j.dump());
}

TEST_CASE("graded module JSON round trip") {
  auto a = lambda_k("ka2.q", 3);
  auto x = truncate(grade_shift(graded_regular(a), 2), -1, TruncationSide::at_least);
  auto j = to_json(x);
  auto back = graded_module_from_json(Json::parse(j.dump()), a);
  auto t = trim(x);
  CHECK(back.lo == t.lo);
  CHECK(back.rep.dims == t.rep.dims);
  CHECK(back.rep.arrows == t.rep.arrows);
}

TEST_CASE("malformed module files") {
  auto a = algebra("ka2.q");
  auto j = to_json(simple_module(a, 0));
  auto bad = j;
  bad["dims"] = Json::array({1});
  CHECK_THROWS_AS(module_from_json(bad), FormatError);
  bad = j;
  bad["arrows"]["zzz"] = Json::array();
  CHECK_THROWS_AS(module_from_json(bad), FormatError);
  bad = j;
  bad["dims"] = Json::array({1, 1});
  bad["arrows"]["a"] = Json::array({Json::array({1, 2})});
  CHECK_THROWS_AS(module_from_json(bad), FormatError);
  CHECK_THROWS_AS(module_from_json(j, algebra("ka3.q")), FormatError);
}
