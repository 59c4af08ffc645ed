#include "cqc/baseline.hpp"

#include <algorithm>
#include <chrono>

namespace cqc {

BaselineResult run_baseline(const LayerPair& graphs, const MiningParams& params, SearchLimits limits) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  BaselineResult out;
  MineStats& stats = out.stats;
  stats.nodes_visited = 0;

  std::vector<VertexSet> found;
  for (Layer flipped : {Layer::kSecond, Layer::kFirst}) {
    const LayerPair pair = complement(graphs, flipped);
    CrossGraphResult pass = enumerate_cross_graph(pair, params, limits);
    stats.nodes_visited += pass.stats.nodes_visited;
    stats.candidates_pruned += pass.stats.candidates_pruned;
    stats.max_queue_size = std::max(stats.max_queue_size, pass.stats.max_queue_size);
    stats.completed = stats.completed && pass.stats.completed;
    for (VertexSet& s : pass.quasi_cliques) found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.raw_sets = found.size();

  std::vector<Pattern> scored;
  for (VertexSet& s : found) {
    Pattern p = make_pattern(graphs, std::move(s), params);
    if (p.interesting()) scored.push_back(std::move(p));
  }
  std::sort(scored.begin(), scored.end(), emission_before);
  stats.patterns_emitted = scored.size();
  for (const Pattern& p : scored) {
    if (out.result.try_accept(graphs, p, params.redundancy)) ++stats.patterns_accepted;
  }
  stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace cqc
