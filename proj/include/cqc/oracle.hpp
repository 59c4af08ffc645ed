#pragma once

#include <cstddef>
#include <vector>

#include "cqc/graph.hpp"
#include "cqc/pattern.hpp"

namespace cqc {

// Exhaustive reference results for small graphs.
struct OracleResult {
  std::vector<Pattern> all_cqcs;  // every interesting CQC, in emission_before order
  ResultSet greedy_result;        // all_cqcs offered to try_accept in that order
};

inline constexpr std::size_t kOracleVertexLimit = 16;

// Scores all 2^n subsets of size >= 2. Throws std::invalid_argument when the
// graph has more than `limit` vertices.
OracleResult enumerate_all(const LayerPair& graphs, const MiningParams& params,
                           std::size_t limit = kOracleVertexLimit);

// Interesting CQCs missing from `result` that are not redundant (either
// direction) to any accepted pattern. Empty when `result` is maximal.
std::vector<Pattern> unexplained_patterns(const LayerPair& graphs, const OracleResult& oracle,
                                          const ResultSet& result, const Rational& r);

}  // namespace cqc
