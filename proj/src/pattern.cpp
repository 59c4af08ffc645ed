#include "cqc/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace cqc {

void MiningParams::validate() const {
  if (delta <= 0 || delta > 1) throw std::invalid_argument("delta must lie in (0, 1]");
  if (delta_prime < 0 || delta_prime >= 1) throw std::invalid_argument("delta' must lie in [0, 1)");
  if (redundancy <= 0 || redundancy > 1) throw std::invalid_argument("r must lie in (0, 1]");
  if (min_size < 2) throw std::invalid_argument("min size must be at least 2");
  if (base_gamma < 0 || base_gamma > 1) throw std::invalid_argument("base gamma must lie in [0, 1]");
}

namespace {

struct LayerCounts {
  std::size_t edges = 0;
  std::size_t min_degree = 0;
};

LayerCounts count_layer(const LayerPair& graphs, std::span<const VertexId> set, Layer layer) {
  LayerCounts c;
  c.min_degree = set.size();
  std::size_t twice = 0;
  for (VertexId v : set) {
    std::size_t d = degree_within(graphs, v, set, layer);
    twice += d;
    c.min_degree = std::min(c.min_degree, d);
  }
  c.edges = twice / 2;
  return c;
}

std::int64_t pairs(std::size_t k) { return static_cast<std::int64_t>(k * (k - 1) / 2); }

}  // namespace

Pattern make_pattern(const LayerPair& graphs, VertexSet vertices, const MiningParams& params) {
  if (vertices.size() < 2) throw std::domain_error("a pattern needs at least two vertices");
  Pattern p;
  p.vertices = std::move(vertices);
  const auto k = static_cast<std::int64_t>(p.vertices.size());
  for (Layer layer : kLayers) {
    LayerCounts c = count_layer(graphs, p.vertices, layer);
    p.edges[index(layer)] = c.edges;
    p.gamma[index(layer)] = Rational(static_cast<std::int64_t>(c.min_degree), k - 1);
    p.alpha[index(layer)] = Rational(static_cast<std::int64_t>(c.edges), pairs(p.vertices.size()));
  }
  p.contrast = abs(p.alpha[0] - p.alpha[1]);
  const Rational best_gamma = std::max(p.gamma[0], p.gamma[1]);
  p.cqc = best_gamma >= params.delta && p.contrast > params.delta_prime;
  if (best_gamma < params.base_gamma || p.vertices.size() < params.min_size) {
    p.interestingness = Rational(-1);
  } else {
    p.interestingness = Rational(k) * p.contrast;
  }
  return p;
}

bool is_delta_quasi_clique(const LayerPair& graphs, std::span<const VertexId> set, Layer layer,
                           const Rational& delta) {
  if (set.size() < 2) throw std::domain_error("quasi-clique test needs at least two vertices");
  const std::int64_t need = ceil(delta * Rational(static_cast<std::int64_t>(set.size() - 1)));
  return std::all_of(set.begin(), set.end(), [&](VertexId v) {
    return static_cast<std::int64_t>(degree_within(graphs, v, set, layer)) >= need;
  });
}

Rational contrast(const LayerPair& graphs, std::span<const VertexId> set) {
  return abs(alpha_density(graphs, set, Layer::kFirst) - alpha_density(graphs, set, Layer::kSecond));
}

bool is_cqc(const LayerPair& graphs, std::span<const VertexId> set, const MiningParams& params) {
  const bool dense = is_delta_quasi_clique(graphs, set, Layer::kFirst, params.delta) ||
                     is_delta_quasi_clique(graphs, set, Layer::kSecond, params.delta);
  return dense && contrast(graphs, set) > params.delta_prime;
}

Rational interestingness(const LayerPair& graphs, std::span<const VertexId> set, const MiningParams& params) {
  if (set.size() < 2) throw std::domain_error("interestingness needs at least two vertices");
  const Rational best_gamma =
      std::max(gamma_density(graphs, set, Layer::kFirst), gamma_density(graphs, set, Layer::kSecond));
  if (best_gamma < params.base_gamma || set.size() < params.min_size) return Rational(-1);
  return Rational(static_cast<std::int64_t>(set.size())) * contrast(graphs, set);
}

bool is_redundant(const LayerPair& graphs, const Pattern& o, const Pattern& p, const Rational& r) {
  if (o.vertices == p.vertices || o.interestingness > p.interestingness) return false;
  VertexSet shared;
  std::set_intersection(o.vertices.begin(), o.vertices.end(), p.vertices.begin(), p.vertices.end(),
                        std::back_inserter(shared));
  Rational coverage(0);
  for (Layer layer : kLayers) {
    const auto own = static_cast<std::int64_t>(o.edges[index(layer)]);
    if (own == 0) {
      coverage += 1;
      continue;
    }
    coverage += Rational(static_cast<std::int64_t>(edges_within(graphs, shared, layer)), own);
  }
  return coverage / 2 >= r;
}

bool ResultSet::try_accept(const LayerPair& graphs, const Pattern& candidate, const Rational& r) {
  for (const Pattern& p : accepted_) {
    if (p.vertices == candidate.vertices) return false;
    if (is_redundant(graphs, candidate, p, r) || is_redundant(graphs, p, candidate, r)) return false;
  }
  accepted_.push_back(candidate);
  return true;
}

bool emission_before(const Pattern& a, const Pattern& b) {
  if (a.interestingness != b.interestingness) return a.interestingness > b.interestingness;
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vertices < b.vertices;
}

}  // namespace cqc
