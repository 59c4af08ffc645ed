#include "cqc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cqc {

OracleResult enumerate_all(const LayerPair& graphs, const MiningParams& params, std::size_t limit) {
  params.validate();
  const std::size_t n = graphs.vertex_count();
  if (n > limit) {
    throw std::invalid_argument("oracle refuses " + std::to_string(n) + " vertices (limit " +
                                std::to_string(limit) + ")");
  }
  OracleResult out;
  VertexSet subset;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    subset.clear();
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) subset.push_back(v);
    }
    Pattern p = make_pattern(graphs, subset, params);
    if (p.interesting()) out.all_cqcs.push_back(std::move(p));
  }
  std::sort(out.all_cqcs.begin(), out.all_cqcs.end(), emission_before);
  for (const Pattern& p : out.all_cqcs) out.greedy_result.try_accept(graphs, p, params.redundancy);
  return out;
}

std::vector<Pattern> unexplained_patterns(const LayerPair& graphs, const OracleResult& oracle,
                                          const ResultSet& result, const Rational& r) {
  std::vector<Pattern> missing;
  for (const Pattern& x : oracle.all_cqcs) {
    bool explained = false;
    for (const Pattern& a : result) {
      if (a.vertices == x.vertices || is_redundant(graphs, x, a, r) || is_redundant(graphs, a, x, r)) {
        explained = true;
        break;
      }
    }
    if (!explained) missing.push_back(x);
  }
  return missing;
}

}  // namespace cqc
