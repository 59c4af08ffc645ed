#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cqc/edge_list.hpp"
#include "cqc/graph.hpp"
#include "cqc/rational.hpp"

namespace cqc {

struct SynthConfig {
  std::size_t n = 110;
  std::size_t target_edges = 442;  // background edges per layer, before embedding
  std::size_t n_embedded = 2;      // quasi-cliques planted per layer
  std::size_t qc_size = 10;
  Rational qc_density{3, 5};       // alpha each planted set reaches
  std::uint64_t seed = 1;

  // Throws std::invalid_argument for budgets that cannot be met.
  void validate() const;
};

struct SynthInstance {
  std::size_t n = 0;
  std::vector<std::string> labels;  // zero-padded ids, so label order equals id order
  std::array<std::vector<IdEdge>, 2> edges;
  std::array<std::vector<VertexSet>, 2> embedded;  // planted sets per layer

  LayerPair graphs() const;
  EdgeList edge_list(Layer layer) const;
};

// Two independent preferential-attachment layers with planted dense sets.
// Deterministic in config.seed.
SynthInstance generate(const SynthConfig& config);

}  // namespace cqc
