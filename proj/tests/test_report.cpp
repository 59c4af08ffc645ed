#include <doctest.h>

#include <sstream>

#include "cqc/report.hpp"
#include "support.hpp"

using namespace cqc;

TEST_CASE("pattern JSON line") {
  LayerPair g = testing::toy_pair();
  MiningParams params;
  params.delta = 1;
  const Pattern p = make_pattern(g, g.vertex_set({"A", "B", "C", "D"}), params);
  const Json j = pattern_json(g, p);
  CHECK(j.dump() ==
        R"({"vertices":["A","B","C","D"],"e1":1,"e2":6,"gamma1":0.0,"gamma2":1.0,"alpha1":0.166667,)"
        R"("alpha2":1.0,"contrast":0.833333,"interestingness":3.33333,"dense_layer":2})");
}

TEST_CASE("labels are sorted as strings in output") {
  LayerPair g = LayerPair::from_edges(3, std::vector<IdEdge>{{0, 1}, {1, 2}, {0, 2}}, std::vector<IdEdge>{},
                                      {"9", "10", "b"});
  MiningParams params;
  params.min_size = 3;
  const Json j = pattern_json(g, make_pattern(g, {0, 1, 2}, params));
  CHECK(j["vertices"] == Json::array({"10", "9", "b"}));
  CHECK(j["dense_layer"] == 1);
}

TEST_CASE("summary and report rows") {
  LayerPair g = testing::three_patterns();
  MiningParams params;
  params.min_size = 3;
  std::vector<Pattern> ps{make_pattern(g, g.vertex_set({"A", "C", "D"}), params),
                          make_pattern(g, g.vertex_set({"B", "D", "E", "F"}), params)};
  ResultSummary s = summarize(ps);
  CHECK(s.count == 2);
  CHECK(s.sum_interestingness == Rational(17, 3));
  CHECK(*s.avg_size == doctest::Approx(3.5));
  CHECK(*s.avg_density == doctest::Approx((1.0 + 2.0 / 3.0) / 2));

  MineStats stats;
  stats.nodes_visited = 12;
  stats.wall_time_ms = 1.5;
  Json full = stats_json("direct", "mine", stats, s, params);
  Json none = stats_json("empty", "baseline", stats, summarize({}), params);
  CHECK(none["result"]["avg_I"].is_null());
  CHECK(none["result"]["sum_I"] == 0);

  std::vector<RunMetrics> runs{metrics_from_stats(full, "a.json"), metrics_from_stats(none, "b.json")};
  std::ostringstream csv;
  write_report_csv(csv, runs);
  CHECK(csv.str() ==
        "metric,direct,empty\n"
        "runtime_ms,1.5,1.5\n"
        "nodes_visited,12,12\n"
        "avg_I,2.83333,null\n"
        "sum_I,5.66667,0\n"
        "avg_gamma,0.833333,null\n"
        "avg_size,3.5,null\n");
}

TEST_CASE("malformed stats name the file") {
  Json bad = Json::parse(R"({"label":"x","nodes_visited":3})");
  try {
    metrics_from_stats(bad, "runs/x.json");
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("runs/x.json") != std::string::npos);
  }
  Json wrong = Json::parse(R"({"wall_time_ms":"fast","nodes_visited":3,"result":{}})");
  CHECK_THROWS_AS(metrics_from_stats(wrong, "w.json"), std::runtime_error);
}
