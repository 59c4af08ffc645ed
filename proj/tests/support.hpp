#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cqc/edge_list.hpp"
#include "cqc/graph.hpp"
#include "cqc/pattern.hpp"

namespace cqc::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CQC_FIXTURE_DIR) / name;
}

inline LayerPair load_fixture(const std::string& stem) {
  return load_layer_pair(read_edge_list_file(fixture(stem + "_layer1.txt")),
                         read_edge_list_file(fixture(stem + "_layer2.txt")));
}

inline LayerPair toy_pair() { return load_fixture("toy_pair"); }
inline LayerPair three_patterns() { return load_fixture("three_patterns"); }

// Erdos-Renyi pair over n vertices with separate edge probabilities.
inline LayerPair random_pair(std::size_t n, double p1, double p2, std::mt19937_64& rng) {
  std::bernoulli_distribution e1(p1);
  std::bernoulli_distribution e2(p2);
  std::vector<IdEdge> first;
  std::vector<IdEdge> second;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (e1(rng)) first.emplace_back(u, v);
      if (e2(rng)) second.emplace_back(u, v);
    }
  }
  return LayerPair::from_edges(n, first, second);
}

struct Instance {
  LayerPair graphs;
  MiningParams params;
  std::string description;
};

// Mixed-density small instance with varied thresholds; deterministic in seed.
inline Instance random_instance(std::uint64_t seed, std::size_t min_n = 4, std::size_t max_n = 12) {
  std::mt19937_64 rng(seed);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
  const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.9};
  const double p1 = densities[rng() % 5];
  const double p2 = densities[rng() % 5];
  const Rational deltas[] = {Rational(1, 2), Rational(3, 5), Rational(2, 3), Rational(3, 4), Rational(1)};
  const Rational primes[] = {Rational(0), Rational(1, 10), Rational(1, 4)};
  const Rational rs[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(1)};
  const Rational bases[] = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  Instance inst;
  inst.graphs = random_pair(n, p1, p2, rng);
  inst.params.delta = deltas[rng() % 5];
  inst.params.delta_prime = primes[rng() % 3];
  inst.params.redundancy = rs[rng() % 4];
  inst.params.min_size = 2 + rng() % 3;
  inst.params.base_gamma = bases[rng() % 4];
  inst.params.diameter_pruning = rng() % 2 == 0;
  inst.description = "seed=" + std::to_string(seed) + " n=" + std::to_string(n) + " p1=" + std::to_string(p1) +
                     " p2=" + std::to_string(p2) + " delta=" + std::to_string(to_double(inst.params.delta)) +
                     " min_size=" + std::to_string(inst.params.min_size);
  return inst;
}

inline std::vector<VertexSet> vertex_sets(const std::vector<Pattern>& patterns) {
  std::vector<VertexSet> out;
  for (const Pattern& p : patterns) out.push_back(p.vertices);
  return out;
}

}  // namespace cqc::testing
