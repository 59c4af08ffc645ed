#include <doctest.h>

#include "cqc/enumeration.hpp"
#include "cqc/oracle.hpp"
#include "support.hpp"

using namespace cqc;

TEST_CASE("oracle on the toy pair") {
  LayerPair g = testing::toy_pair();
  MiningParams params;
  params.delta = 1;
  params.min_size = 4;
  OracleResult r = enumerate_all(g, params);
  REQUIRE_FALSE(r.all_cqcs.empty());
  CHECK(r.all_cqcs.front().vertices == g.vertex_set({"A", "B", "C", "D"}));
  CHECK(r.greedy_result.patterns().front().interestingness == Rational(10, 3));
}

TEST_CASE("oracle output is sorted and greedy") {
  testing::Instance inst = testing::random_instance(42, 10, 10);
  OracleResult r = enumerate_all(inst.graphs, inst.params);
  CHECK(std::is_sorted(r.all_cqcs.begin(), r.all_cqcs.end(), emission_before));
  for (const Pattern& p : r.all_cqcs) CHECK(p.interesting());
  CHECK(unexplained_patterns(inst.graphs, r, r.greedy_result, inst.params.redundancy).empty());
}

TEST_CASE("oracle refuses large inputs and handles identical layers") {
  std::mt19937_64 rng(1);
  LayerPair big = testing::random_pair(17, 0.3, 0.3, rng);
  CHECK_THROWS_AS(enumerate_all(big, MiningParams{}), std::invalid_argument);
  CHECK_NOTHROW(enumerate_all(testing::random_pair(8, 0.3, 0.3, rng), MiningParams{}, 8));

  LayerPair one = testing::random_pair(10, 0.6, 0.0, rng);
  std::vector<IdEdge> e = one.edges(Layer::kFirst);
  CHECK(enumerate_all(LayerPair::from_edges(10, e, e), MiningParams{}).all_cqcs.empty());
}

TEST_CASE("engine and oracle agree on a sample of instances") {
  for (std::uint64_t seed = 600; seed < 650; ++seed) {
    testing::Instance inst = testing::random_instance(seed);
    std::vector<VertexSet> emitted;
    MineObserver obs;
    obs.on_emit = [&](const Pattern& p) { emitted.push_back(p.vertices); };
    MineResult mined = mine(inst.graphs, inst.params, &obs);
    OracleResult oracle = enumerate_all(inst.graphs, inst.params);
    std::sort(emitted.begin(), emitted.end());
    std::vector<VertexSet> expected = testing::vertex_sets(oracle.all_cqcs);
    std::sort(expected.begin(), expected.end());
    CHECK_MESSAGE(emitted == expected, inst.description);
    CHECK_MESSAGE(testing::vertex_sets(mined.result.patterns()) == testing::vertex_sets(oracle.greedy_result.patterns()),
                  inst.description);
  }
}
