#include <doctest.h>

#include <random>
#include <sstream>

#include "cqc/graph.hpp"
#include "cqc/simd/kernels.hpp"
#include "support.hpp"

using namespace cqc;

TEST_CASE("edge list reader skips comments and blanks and reports bad lines") {
  std::istringstream ok("# header\n\nA B\n  C\tD  \n");
  EdgeList edges = read_edge_list(ok, "ok.txt");
  REQUIRE(edges.size() == 2);
  CHECK(edges[1] == LabelEdge{"C", "D"});

  std::istringstream one("A B\nC\n");
  try {
    read_edge_list(one, "bad.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("bad.txt:2") == 0);
  }
  std::istringstream three("A B C\n");
  CHECK_THROWS_AS(read_edge_list(three), ParseError);
  CHECK_THROWS(read_edge_list_file("/nonexistent/edges.txt"));
}

TEST_CASE("edge list round trip") {
  EdgeList edges{{"x", "y"}, {"y", "z"}};
  std::ostringstream out;
  write_edge_list(out, edges);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == edges);
}

TEST_CASE("layer pair assigns ids in label order and drops loops and duplicates") {
  LayerPair g = load_layer_pair({{"b", "a"}, {"a", "b"}, {"c", "c"}}, {{"d", "a"}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.label(0) == "a");
  CHECK(g.label(3) == "d");
  CHECK(g.find("c").value() == 2);
  CHECK_FALSE(g.find("zz").has_value());
  CHECK(g.edge_count(Layer::kFirst) == 1);
  CHECK(g.load_report().duplicates_dropped[0] == 1);
  CHECK(g.load_report().self_loops_dropped[0] == 1);
  CHECK(g.has_edge(0, 3, Layer::kSecond));
  CHECK_FALSE(g.has_edge(0, 3, Layer::kFirst));
  CHECK(g.degree(2, Layer::kFirst) == 0);
  CHECK_THROWS_AS(g.vertex_set({"a", "nope"}), std::out_of_range);
}

TEST_CASE("membership counts match a naive count on both storage paths") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {30u, 200u, 9000u}) {
    const double p = n > 1000 ? 0.002 : 0.3;
    LayerPair g = testing::random_pair(n, p, p / 2, rng);
    VertexBitset marks(n);
    std::vector<VertexId> marked;
    for (VertexId v = 0; v < n; ++v) {
      if (rng() % 3 == 0) marked.push_back(v);
    }
    marks.assign(marked);
    for (const simd::Isa isa : {simd::Isa::kScalar, simd::Isa::kAvx2}) {
      if (isa == simd::Isa::kAvx2 && !simd::avx2_kernels()) continue;
      simd::select(isa);
      for (VertexId v = 0; v < n; v += n / 25) {
        for (Layer layer : kLayers) {
          std::size_t naive = 0;
          for (VertexId w : g.neighbors(v, layer)) naive += marks.test(w);
          CHECK(g.count_marked_neighbors(v, layer, marks) == naive);
          CHECK(degree_within(g, v, marked, layer) == naive);
        }
      }
    }
  }
  simd::select(simd::cpu_supports_avx2() ? simd::Isa::kAvx2 : simd::Isa::kScalar);
}

TEST_CASE("toy pair densities") {
  LayerPair g = testing::toy_pair();
  const VertexSet all = g.vertex_set({"A", "B", "C", "D", "E"});
  CHECK(edges_within(g, all, Layer::kSecond) == 7);
  CHECK(alpha_density(g, all, Layer::kSecond) == Rational(7, 10));
  CHECK(gamma_density(g, all, Layer::kSecond) == Rational(1, 4));
  const VertexSet abcd = g.vertex_set({"A", "B", "C", "D"});
  CHECK(gamma_density(g, abcd, Layer::kSecond) == Rational(1));
  CHECK(alpha_density(g, abcd, Layer::kFirst) == Rational(1, 6));
  CHECK(edges_between(g, g.vertex_set({"A", "B"}), g.vertex_set({"C", "D"}), Layer::kSecond) == 4);
  CHECK_THROWS_AS(edges_between(g, g.vertex_set({"A", "B"}), g.vertex_set({"B", "C"}), Layer::kSecond),
                  std::invalid_argument);
  CHECK_THROWS_AS(gamma_density(g, g.vertex_set({"A"}), Layer::kFirst), std::domain_error);
  CHECK_THROWS_AS(alpha_density(g, {}, Layer::kFirst), std::domain_error);
}

TEST_CASE("complement flips exactly one layer") {
  std::mt19937_64 rng(8);
  LayerPair g = testing::random_pair(20, 0.3, 0.6, rng);
  LayerPair c = complement(g, Layer::kSecond);
  CHECK(c.edge_count(Layer::kFirst) == g.edge_count(Layer::kFirst));
  CHECK(c.edge_count(Layer::kSecond) == 190 - g.edge_count(Layer::kSecond));
  for (VertexId u = 0; u < 20; ++u) {
    CHECK_FALSE(c.has_edge(u, u, Layer::kSecond));
    for (VertexId v = u + 1; v < 20; ++v) {
      CHECK(c.has_edge(u, v, Layer::kSecond) != g.has_edge(u, v, Layer::kSecond));
      CHECK(c.has_edge(u, v, Layer::kFirst) == g.has_edge(u, v, Layer::kFirst));
    }
  }
}

TEST_CASE("edges() lists each edge once in ascending order") {
  LayerPair g = LayerPair::from_edges(4, std::vector<IdEdge>{{2, 1}, {0, 3}}, std::vector<IdEdge>{});
  CHECK(g.edges(Layer::kFirst) == std::vector<IdEdge>{{0, 3}, {1, 2}});
  CHECK(g.label(2) == "2");
}
