#include <doctest.h>

#include "cqc/pattern.hpp"
#include "support.hpp"

using namespace cqc;

TEST_CASE("parse_rational accepts decimals, fractions and integers") {
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("1") == Rational(1));
  CHECK(parse_rational("0.83") == Rational(83, 100));
  for (const char* bad : {"", "abc", "1/0", "0.5.1", "1/", "-", "1e3"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("rounding and integer parts") {
  CHECK(round_significant(10.0 / 3.0) == doctest::Approx(3.33333).epsilon(1e-12));
  CHECK(round_significant(0.0) == 0.0);
  CHECK(cqc::ceil(Rational(7, 2)) == 4);
  CHECK(cqc::ceil(Rational(-7, 2)) == -3);
  CHECK(cqc::floor(Rational(-7, 2)) == -4);
  CHECK(Priority(Rational(3)) < Priority::infinity());
  CHECK_FALSE(Priority(Rational(0)).positive());
}

TEST_CASE("params validation") {
  MiningParams p;
  CHECK_NOTHROW(p.validate());
  p.delta = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = MiningParams{};
  p.delta_prime = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = MiningParams{};
  p.redundancy = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = MiningParams{};
  p.min_size = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("toy pair: the four-vertex block is the contrasting pattern") {
  LayerPair g = testing::toy_pair();
  MiningParams params;
  params.delta = 1;
  params.min_size = 4;
  const VertexSet abcd = g.vertex_set({"A", "B", "C", "D"});
  CHECK(contrast(g, abcd) == Rational(5, 6));
  CHECK(is_delta_quasi_clique(g, abcd, Layer::kSecond, Rational(1)));
  CHECK_FALSE(is_delta_quasi_clique(g, abcd, Layer::kFirst, Rational(1, 2)));
  params.delta_prime = Rational(82, 100);
  CHECK(is_cqc(g, abcd, params));
  params.delta_prime = Rational(5, 6);
  CHECK_FALSE(is_cqc(g, abcd, params));  // contrast must be strictly above delta'
  params.delta_prime = 0;
  CHECK(interestingness(g, abcd, params) == Rational(10, 3));

  const Pattern p = make_pattern(g, abcd, params);
  CHECK(p.interesting());
  CHECK(p.edges == std::array<std::size_t, 2>{1, 6});
  CHECK(p.gamma[1] == Rational(1));
  CHECK(p.alpha[0] == Rational(1, 6));
  CHECK(p.dense_layer() == Layer::kSecond);
  CHECK_THROWS_AS(make_pattern(g, g.vertex_set({"A"}), params), std::domain_error);
}

TEST_CASE("interestingness is -1 below min size or below base gamma") {
  LayerPair g = testing::three_patterns();
  MiningParams params;
  const VertexSet p = g.vertex_set({"A", "C", "D"});
  CHECK(interestingness(g, p, params) == Rational(-1));  // min_size 4 by default
  params.min_size = 3;
  CHECK(interestingness(g, p, params) == Rational(3));
  params.base_gamma = 1;
  CHECK(interestingness(g, g.vertex_set({"A", "B", "C", "D"}), params) == Rational(-1));
}

TEST_CASE("three-pattern example: scores and redundancy") {
  LayerPair g = testing::three_patterns();
  MiningParams params;
  params.min_size = 3;
  const Pattern o = make_pattern(g, g.vertex_set({"A", "B", "C", "D"}), params);
  const Pattern p = make_pattern(g, g.vertex_set({"A", "C", "D"}), params);
  const Pattern q = make_pattern(g, g.vertex_set({"B", "D", "E", "F"}), params);
  CHECK(o.interestingness == Rational(2));
  CHECK(p.interestingness == Rational(3));
  CHECK(q.interestingness == Rational(8, 3));

  const Rational r(1, 10);
  CHECK(is_redundant(g, o, p, r));
  CHECK_FALSE(is_redundant(g, p, o, r));  // I(P) > I(O)
  CHECK_FALSE(is_redundant(g, o, p, Rational(31, 100)));  // coverage is exactly 0.3
  CHECK(is_redundant(g, o, p, Rational(3, 10)));
  CHECK_FALSE(is_redundant(g, q, o, r));
  CHECK_FALSE(is_redundant(g, q, p, r));
  CHECK_FALSE(is_redundant(g, p, p, r));

  ResultSet result;
  CHECK(result.try_accept(g, p, r));
  CHECK(result.try_accept(g, q, r));
  CHECK_FALSE(result.try_accept(g, o, r));
  CHECK(result.size() == 2);
  CHECK_FALSE(result.try_accept(g, p, r));  // same set again
}

TEST_CASE("mutual redundancy keeps the first offered pattern") {
  // Two triangles in layer 1 sharing an edge, no layer 2 edges: equal I and
  // full overlap of the shared edge.
  std::vector<IdEdge> first{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {0, 3}};
  LayerPair g = LayerPair::from_edges(4, first, std::vector<IdEdge>{});
  MiningParams params;
  params.min_size = 3;
  const Pattern a = make_pattern(g, {0, 1, 2}, params);
  const Pattern b = make_pattern(g, {0, 1, 3}, params);
  REQUIRE(a.interestingness == b.interestingness);
  CHECK(is_redundant(g, a, b, Rational(1, 3)));
  CHECK(is_redundant(g, b, a, Rational(1, 3)));
  ResultSet result;
  CHECK(result.try_accept(g, a, Rational(1, 3)));
  CHECK_FALSE(result.try_accept(g, b, Rational(1, 3)));
  CHECK(result.patterns().front().vertices == VertexSet{0, 1, 2});
}

TEST_CASE("emission order: interestingness, then size, then ids") {
  Pattern a;
  a.vertices = {0, 1, 2};
  a.interestingness = 2;
  Pattern b = a;
  b.vertices = {0, 1, 2, 3};
  Pattern c = a;
  c.vertices = {0, 1, 3};
  Pattern d = a;
  d.interestingness = 3;
  d.vertices = {5, 6, 7, 8};
  CHECK(emission_before(d, a));
  CHECK(emission_before(a, b));
  CHECK(emission_before(a, c));
  CHECK_FALSE(emission_before(a, a));
}
