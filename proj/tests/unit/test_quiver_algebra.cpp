#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace lambdak;
using namespace lambdak::testing;

TEST_CASE("parse_quiver_spec oracles") {
  auto p = load("sec5_1.q");
  CHECK(p.quiver.num_vertices() == 3);
  CHECK(p.quiver.num_arrows() == 5);
  CHECK(p.relations.size() == 5);
  REQUIRE(p.loop_shape);
  CHECK(p.loop_shape->k == 3);
  CHECK(p.loop_shape->base->quiver.num_arrows() == 2);

  auto k = parse_quiver_spec("vertices: x\n");
  auto a = BoundQuiverAlgebra::build(k);
  CHECK(a->dim() == 1);

  CHECK_THROWS_AS(parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 3\n"), ParseError);
  try {
    parse_quiver_spec("field p=101\nvertices: 1 2\narrow a: 1 -> 3\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_quiver_spec("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 3\nrelation +1*a.b\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2 [deg=]\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("field p=100\nvertices: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("vertices: 1\nfoo\n"), ParseError);
  auto round = parse_quiver_spec(format_quiver_spec(p));
  CHECK(round.relations.size() == p.relations.size());
}

TEST_CASE("build_algebra_table oracles") {
  auto ka2 = algebra("ka2.q");
  CHECK(ka2->dim() == 3);
  auto r3 = BoundQuiverAlgebra::build(truncated_polynomial(3));
  CHECK(r3->dim() == 3);
  auto l3 = lambda_k("ka2.q", 3);
  CHECK(l3->dim() == 9);
  auto hand = algebra("sec5_1.q");
  CHECK(hand->dim() == 18);
  CHECK(algebra("sec5_3_tilted.q")->dim() == 5);
  // Non-admissible: a loop without nilpotency bound.
  CHECK_THROWS(BoundQuiverAlgebra::build(parse_quiver_spec("vertices: 1\narrow x: 1 -> 1\n"), 10));
}

TEST_CASE("build_lambda_k and triangular and tensor dimensions") {
  for (auto name : {"ka2.q", "ka3.q", "ka4.q", "kd4.q", "sec5_3_tilted.q"}) {
    auto base = algebra(name);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto lk = lambda_k(name, k);
      CHECK(lk->dim() == k * base->dim());
      CHECK(lk->gorenstein_parameter() == std::optional<int>(static_cast<int>(k) - 1));
    }
    auto t2 = BoundQuiverAlgebra::build(build_triangular(load(name), 2));
    CHECK(t2->dim() == 3 * base->dim());
    auto t3 = BoundQuiverAlgebra::build(build_triangular(load(name), 3));
    CHECK(t3->dim() == 6 * base->dim());
  }
  auto k = parse_quiver_spec("vertices: 0\n");
  CHECK(BoundQuiverAlgebra::build(build_lambda_k(k, 4))->dim() == 4);
  auto ka2 = load("ka2.q");
  auto l3 = build_lambda_k(ka2, 3);
  CHECK(l3.quiver.num_vertices() == 2);
  CHECK(l3.quiver.num_arrows() == 3);
  CHECK(l3.relations.size() == 3);
  auto t = BoundQuiverAlgebra::build(tensor_presentation(ka2, ka2));
  CHECK(t->dim() == 9);
  CHECK(BoundQuiverAlgebra::build(build_triangular(ka2, 2))->dim() == 9);
  CHECK(BoundQuiverAlgebra::build(tensor_presentation(ka2, truncated_polynomial(3)))->dim() == 9);
  CHECK(BoundQuiverAlgebra::build(tensor_presentation(ka2, parse_quiver_spec("vertices: 0\n")))->dim() == 3);
  auto td4 = build_triangular(load("kd4.q"), 2);
  CHECK(td4.quiver.num_vertices() == 8);
  auto sec53 = build_lambda_k(load("sec5_3_tilted.q"), 2);
  CHECK(BoundQuiverAlgebra::build(sec53)->dim() == 10);
}

TEST_CASE("gorenstein_parameter oracles") {
  CHECK(lambda_k("ka2.q", 3)->gorenstein_parameter() == std::optional<int>(2));
  CHECK(algebra("ka2.q")->gorenstein_parameter() == std::optional<int>(0));
  CHECK(BoundQuiverAlgebra::build(truncated_polynomial(5))->gorenstein_parameter() == std::optional<int>(4));
  // Socle spread over two degrees.
  auto mixed = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2 [deg=1]\narrow x: 2 -> 2 [deg=1]\nrelation +1*x.x\n");
  auto m = BoundQuiverAlgebra::build(mixed);
  CHECK(!m->gorenstein_parameter());
}

TEST_CASE("algebra axioms on fixtures") {
  std::mt19937_64 rng(3);
  for (auto a : {lambda_k("ka3.q", 3), algebra("sec5_1.q"), lambda_k("sec5_3_tilted.q", 2),
                 BoundQuiverAlgebra::build(build_triangular(load("ka2.q"), 3))}) {
    std::uniform_int_distribution<std::size_t> pick(0, a->dim() - 1);
    for (int t = 0; t < 200; ++t) {
      auto x = pick(rng), y = pick(rng), z = pick(rng);
      auto lhs = a->multiply(a->multiply(x, y), Element{{z, 1}});
      auto rhs = a->multiply(Element{{x, 1}}, a->multiply(y, z));
      CHECK(lhs == rhs);
      for (const auto& [b, c] : a->multiply(x, y)) {
        (void)c;
        CHECK(a->basis(b).degree == a->basis(x).degree + a->basis(y).degree);
      }
    }
    for (std::size_t b = 0; b < a->dim(); ++b) {
      Element unit_left, unit_right;
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        for (auto e : a->multiply(a->idempotent(v), b)) unit_left.push_back(e);
        for (auto e : a->multiply(b, a->idempotent(v))) unit_right.push_back(e);
      }
      CHECK(unit_left == Element{{b, 1}});
      CHECK(unit_right == Element{{b, 1}});
    }
  }
}

TEST_CASE("opposite algebra") {
  auto r = BoundQuiverAlgebra::build(truncated_polynomial(4));
  CHECK(r->opposite()->dim() == 4);
  auto ka2 = algebra("ka2.q");
  auto op = ka2->opposite();
  CHECK(op->dim() == 3);
  CHECK(op->quiver().arrow(0).source == 1);
  CHECK(op->quiver().arrow(0).target == 0);
  CHECK(op->opposite() == ka2);
  auto l3 = algebra("sec5_1.q");
  CHECK(l3->opposite()->dim() == l3->dim());
  // Multiplication is reversed: (xy)^op = y^op x^op.
  auto opp = l3->opposite();
  for (std::size_t x = 0; x < l3->dim(); ++x)
    for (std::size_t y = 0; y < l3->dim(); ++y) {
      Element lhs;
      for (const auto& [b, c] : l3->multiply(x, y))
        for (const auto& [bo, co] : l3->to_opposite(b)) lhs.emplace_back(bo, l3->field().mul(c, co));
      std::sort(lhs.begin(), lhs.end());
      auto rhs = opp->multiply(l3->to_opposite(y), l3->to_opposite(x));
      // Merge duplicates in lhs.
      Element merged;
      for (const auto& [b, c] : lhs) {
        if (!merged.empty() && merged.back().first == b)
          merged.back().second = l3->field().add(merged.back().second, c);
        else
          merged.emplace_back(b, c);
      }
      std::erase_if(merged, [](const auto& t) { return t.second == 0; });
      CHECK(merged == rhs);
    }
}

TEST_CASE("detect_loop_shape recognizes handwritten Lambda_k") {
  auto hand = load("sec5_2.q");
  REQUIRE(hand.loop_shape);
  CHECK(hand.loop_shape->k == 3);
  CHECK(hand.loop_shape->base_arrows.size() == 3);
  CHECK(!load("ka3.q").loop_shape);
  CHECK(algebra("sec5_2.q")->dim() == lambda_k("ka4.q", 3)->dim());
}
