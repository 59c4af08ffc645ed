#pragma once

#include <cstddef>

#include "cqc/enumeration.hpp"

namespace cqc {

struct BaselineResult {
  ResultSet result;
  MineStats stats;              // both complement passes plus rescoring
  std::size_t raw_sets = 0;     // distinct quasi-cliques found before rescoring
};

// Complement-graph strategy: cross-graph quasi-cliques (gamma >= delta in both
// layers) of (G1, not G2) and (not G1, G2), rescored by interestingness on
// the original pair, then filtered for redundancy in emission order.
BaselineResult run_baseline(const LayerPair& graphs, const MiningParams& params, SearchLimits limits = {});

}  // namespace cqc
