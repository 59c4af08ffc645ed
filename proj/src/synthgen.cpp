#include "cqc/synthgen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace cqc {

namespace {

using Rng = std::mt19937_64;

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

class EdgeSet {
 public:
  bool contains(VertexId u, VertexId v) const { return keys_.count(pair_key(u, v)) != 0; }
  bool add(VertexId u, VertexId v, std::vector<IdEdge>& out) {
    if (u == v || !keys_.insert(pair_key(u, v)).second) return false;
    out.emplace_back(std::min(u, v), std::max(u, v));
    return true;
  }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

std::size_t uniform(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// Each new vertex links to earlier ones with probability proportional to
// degree + 1; the per-vertex quota spreads the budget evenly over arrivals.
std::vector<IdEdge> preferential_layer(std::size_t n, std::size_t budget, Rng& rng, EdgeSet& seen) {
  std::vector<IdEdge> edges;
  edges.reserve(budget);
  // One entry per vertex plus one per edge endpoint.
  std::vector<VertexId> urn;
  urn.reserve(n + 2 * budget);
  if (n > 0) urn.push_back(0);
  for (std::size_t t = 1; t < n; ++t) {
    const std::size_t remaining = budget - edges.size();
    const std::size_t arrivals = n - t;
    std::size_t quota = std::clamp<std::size_t>((remaining + arrivals - 1) / arrivals, 1, t);
    quota = std::min(quota, remaining - (arrivals - 1));
    const auto v = static_cast<VertexId>(t);
    std::size_t linked = 0;
    std::size_t attempts = 0;
    while (linked < quota) {
      // The urn only holds earlier vertices; fall back to uniform choice when
      // heavy hubs keep getting redrawn.
      VertexId u = ++attempts < 64 * quota ? urn[uniform(rng, urn.size())] : static_cast<VertexId>(uniform(rng, t));
      if (seen.add(u, v, edges)) {
        urn.push_back(u);
        ++linked;
      }
    }
    for (std::size_t i = 0; i < linked; ++i) urn.push_back(v);
    urn.push_back(v);
  }
  // Early arrivals cannot take a full quota; top up between existing vertices.
  while (edges.size() < budget) {
    const auto u = static_cast<VertexId>(uniform(rng, n));
    const VertexId v = urn[uniform(rng, urn.size())];
    if (seen.add(u, v, edges)) {
      urn.push_back(u);
      urn.push_back(v);
    }
  }
  return edges;
}

VertexSet plant(std::size_t n, const SynthConfig& config, Rng& rng, EdgeSet& seen, std::vector<IdEdge>& edges) {
  std::vector<VertexId> pool(n);
  for (VertexId v = 0; v < n; ++v) pool[v] = v;
  for (std::size_t i = 0; i < config.qc_size; ++i) std::swap(pool[i], pool[i + uniform(rng, n - i)]);
  VertexSet members(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(config.qc_size));
  std::sort(members.begin(), members.end());

  const auto k = static_cast<std::int64_t>(config.qc_size);
  const std::int64_t pairs = k * (k - 1) / 2;
  const std::int64_t needed = ceil(config.qc_density * Rational(pairs));
  std::vector<IdEdge> missing;
  std::int64_t present = 0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (seen.contains(members[a], members[b])) {
        ++present;
      } else {
        missing.emplace_back(members[a], members[b]);
      }
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  for (std::size_t i = 0; present < needed; ++i, ++present) seen.add(missing[i].first, missing[i].second, edges);
  return members;
}

}  // namespace

void SynthConfig::validate() const {
  if (n < 2) throw std::invalid_argument("synthetic graph needs at least 2 vertices");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (target_edges < n - 1 || target_edges > max_edges) {
    throw std::invalid_argument("edge budget must lie in [n-1, n(n-1)/2] = [" + std::to_string(n - 1) + ", " +
                                std::to_string(max_edges) + "], got " + std::to_string(target_edges));
  }
  if (n_embedded > 0 && (qc_size < 2 || qc_size > n)) {
    throw std::invalid_argument("qc_size must lie in [2, n]");
  }
  if (qc_density <= 0 || qc_density > 1) throw std::invalid_argument("qc_density must lie in (0, 1]");
}

SynthInstance generate(const SynthConfig& config) {
  config.validate();
  SynthInstance out;
  out.n = config.n;
  const std::size_t width = std::to_string(config.n - 1).size();
  out.labels.reserve(config.n);
  for (std::size_t v = 0; v < config.n; ++v) {
    std::string digits = std::to_string(v);
    out.labels.push_back(std::string(width - digits.size(), '0') + digits);
  }

  Rng rng(config.seed);
  for (Layer layer : kLayers) {
    EdgeSet seen;
    auto& edges = out.edges[index(layer)];
    edges = preferential_layer(config.n, config.target_edges, rng, seen);
    for (std::size_t i = 0; i < config.n_embedded; ++i) {
      out.embedded[index(layer)].push_back(plant(config.n, config, rng, seen, edges));
    }
    std::sort(edges.begin(), edges.end());
  }
  return out;
}

LayerPair SynthInstance::graphs() const {
  return LayerPair::from_edges(n, edges[0], edges[1], labels);
}

EdgeList SynthInstance::edge_list(Layer layer) const {
  EdgeList out;
  out.reserve(edges[index(layer)].size());
  for (const auto& [u, v] : edges[index(layer)]) out.emplace_back(labels[u], labels[v]);
  return out;
}

}  // namespace cqc
