#include "cqc/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cqc/simd/kernels.hpp"

namespace cqc {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

LayerPair::Adjacency LayerPair::build(std::size_t n, std::span<const IdEdge> edges, std::size_t& self_loops,
                                      std::size_t& duplicates) {
  std::vector<IdEdge> canonical;
  canonical.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint outside the vertex universe");
    if (u == v) {
      ++self_loops;
      continue;
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  auto last = std::unique(canonical.begin(), canonical.end());
  duplicates += static_cast<std::size_t>(canonical.end() - last);
  canonical.erase(last, canonical.end());

  Adjacency adj;
  adj.edge_count = canonical.size();
  adj.offsets.assign(n + 1, 0);
  for (auto [u, v] : canonical) {
    ++adj.offsets[u + 1];
    ++adj.offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.targets.resize(adj.offsets[n]);
  std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (auto [u, v] : canonical) {
    adj.targets[fill[u]++] = v;
    adj.targets[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[i]),
              adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[i + 1]));
  }
  if (n <= kDenseRowLimit) {
    adj.row_words = (n + 63) / 64;
    adj.rows.assign(n * adj.row_words, 0);
    for (auto [u, v] : canonical) {
      adj.rows[u * adj.row_words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
      adj.rows[v * adj.row_words + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
  }
  return adj;
}

LayerPair LayerPair::from_edges(std::size_t n, std::span<const IdEdge> first, std::span<const IdEdge> second,
                                std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw std::invalid_argument("label count does not match vertex count");
  LayerPair g;
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.ids_.emplace(g.labels_[i], static_cast<VertexId>(i)).second) {
      throw std::invalid_argument("duplicate vertex label '" + g.labels_[i] + "'");
    }
  }
  g.layers_[0] = build(n, first, g.report_.self_loops_dropped[0], g.report_.duplicates_dropped[0]);
  g.layers_[1] = build(n, second, g.report_.self_loops_dropped[1], g.report_.duplicates_dropped[1]);
  return g;
}

LayerPair LayerPair::from_labeled_edges(const EdgeList& first, const EdgeList& second) {
  std::map<std::string, VertexId> order;
  for (const EdgeList* list : {&first, &second}) {
    for (const auto& [a, b] : *list) {
      order.emplace(a, 0);
      order.emplace(b, 0);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (auto& [label, id] : order) {
    id = static_cast<VertexId>(labels.size());
    labels.push_back(label);
  }
  auto to_ids = [&](const EdgeList& list) {
    std::vector<IdEdge> out;
    out.reserve(list.size());
    for (const auto& [a, b] : list) out.emplace_back(order.at(a), order.at(b));
    return out;
  };
  const std::size_t n = labels.size();
  return from_edges(n, to_ids(first), to_ids(second), std::move(labels));
}

bool LayerPair::has_edge(VertexId u, VertexId v, Layer layer) const {
  const Adjacency& a = layers_[index(layer)];
  if (!a.rows.empty()) return (a.rows[u * a.row_words + (v >> 6)] >> (v & 63)) & 1u;
  auto nbrs = neighbors(u, layer);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t LayerPair::count_marked_neighbors(VertexId v, Layer layer, const VertexBitset& marks) const {
  const Adjacency& a = layers_[index(layer)];
  const simd::KernelTable& k = simd::active();
  std::size_t deg = a.offsets[v + 1] - a.offsets[v];
  if (!a.rows.empty() && a.row_words * 2 <= deg) {
    return k.and_popcount(a.rows.data() + v * a.row_words, marks.data(), a.row_words);
  }
  return k.count_marked(a.targets.data() + a.offsets[v], deg, marks.data());
}

std::optional<VertexId> LayerPair::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

VertexSet LayerPair::vertex_set(std::initializer_list<std::string_view> labels) const {
  std::vector<VertexId> ids;
  for (std::string_view l : labels) {
    auto id = find(l);
    if (!id) throw std::out_of_range("unknown vertex label '" + std::string(l) + "'");
    ids.push_back(*id);
  }
  return make_vertex_set(std::move(ids));
}

std::vector<IdEdge> LayerPair::edges(Layer layer) const {
  std::vector<IdEdge> out;
  out.reserve(edge_count(layer));
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u, layer)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

LayerPair load_layer_pair(const EdgeList& first, const EdgeList& second) {
  return LayerPair::from_labeled_edges(first, second);
}

std::size_t degree_within(const LayerPair& graphs, VertexId v, std::span<const VertexId> set, Layer layer) {
  auto nbrs = graphs.neighbors(v, layer);
  std::size_t count = 0;
  auto a = nbrs.begin();
  auto b = set.begin();
  while (a != nbrs.end() && b != set.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::size_t edges_within(const LayerPair& graphs, std::span<const VertexId> set, Layer layer) {
  std::size_t twice = 0;
  for (VertexId v : set) twice += degree_within(graphs, v, set, layer);
  return twice / 2;
}

std::size_t edges_between(const LayerPair& graphs, std::span<const VertexId> a, std::span<const VertexId> b,
                          Layer layer) {
  std::vector<VertexId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw std::invalid_argument("edges_between requires disjoint vertex sets");
  std::size_t count = 0;
  for (VertexId v : a) count += degree_within(graphs, v, b, layer);
  return count;
}

namespace {

void require_pair(std::span<const VertexId> set, const char* what) {
  if (set.size() < 2) throw std::domain_error(std::string(what) + " needs at least two vertices");
}

}  // namespace

Rational gamma_density(const LayerPair& graphs, std::span<const VertexId> set, Layer layer) {
  require_pair(set, "gamma density");
  std::size_t min_deg = set.size();
  for (VertexId v : set) min_deg = std::min(min_deg, degree_within(graphs, v, set, layer));
  return Rational(static_cast<std::int64_t>(min_deg), static_cast<std::int64_t>(set.size() - 1));
}

Rational alpha_density(const LayerPair& graphs, std::span<const VertexId> set, Layer layer) {
  require_pair(set, "alpha density");
  auto k = static_cast<std::int64_t>(set.size());
  return Rational(2 * static_cast<std::int64_t>(edges_within(graphs, set, layer)), k * (k - 1));
}

LayerPair complement(const LayerPair& graphs, Layer which) {
  const std::size_t n = graphs.vertex_count();
  std::vector<IdEdge> flipped;
  for (VertexId u = 0; u < n; ++u) {
    auto nbrs = graphs.neighbors(u, which);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (VertexId v = u + 1; v < n; ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
        continue;
      }
      flipped.emplace_back(u, v);
    }
  }
  std::vector<IdEdge> kept = graphs.edges(other(which));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (VertexId v = 0; v < n; ++v) labels.push_back(graphs.label(v));
  return which == Layer::kFirst ? LayerPair::from_edges(n, flipped, kept, std::move(labels))
                                : LayerPair::from_edges(n, kept, flipped, std::move(labels));
}

}  // namespace cqc
