#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cqc/edge_list.hpp"
#include "cqc/rational.hpp"
#include "cqc/vertex_bitset.hpp"

namespace cqc {

enum class Layer : std::uint8_t { kFirst = 0, kSecond = 1 };

inline constexpr std::array<Layer, 2> kLayers{Layer::kFirst, Layer::kSecond};

constexpr std::size_t index(Layer layer) { return static_cast<std::size_t>(layer); }
constexpr Layer other(Layer layer) { return layer == Layer::kFirst ? Layer::kSecond : Layer::kFirst; }
// 1 or 2, as used in file formats and messages.
constexpr int layer_number(Layer layer) { return static_cast<int>(layer) + 1; }

using IdEdge = std::pair<VertexId, VertexId>;

// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<VertexId> ids);

// Two undirected simple graphs over one vertex universe. Immutable once built,
// so it can be shared between threads without synchronisation.
class LayerPair {
 public:
  struct LoadReport {
    std::array<std::size_t, 2> self_loops_dropped{0, 0};
    std::array<std::size_t, 2> duplicates_dropped{0, 0};
  };

  // Graphs with at most this many vertices also keep one adjacency bitmap row
  // per vertex so high-degree membership counts become AND+popcount.
  static constexpr std::size_t kDenseRowLimit = 8192;

  LayerPair() = default;

  // Vertex ids follow the sorted order of the labels in the union of both lists.
  static LayerPair from_labeled_edges(const EdgeList& first, const EdgeList& second);

  // Edges over ids 0..n-1. Labels default to the decimal id.
  static LayerPair from_edges(std::size_t n, std::span<const IdEdge> first, std::span<const IdEdge> second,
                              std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count(Layer layer) const { return layers_[index(layer)].edge_count; }

  std::span<const VertexId> neighbors(VertexId v, Layer layer) const {
    const Adjacency& a = layers_[index(layer)];
    return {a.targets.data() + a.offsets[v], a.targets.data() + a.offsets[v + 1]};
  }
  std::size_t degree(VertexId v, Layer layer) const {
    const Adjacency& a = layers_[index(layer)];
    return a.offsets[v + 1] - a.offsets[v];
  }
  bool has_edge(VertexId u, VertexId v, Layer layer) const;

  // Adjacency bitmap row of v, empty when the graph exceeds kDenseRowLimit.
  std::span<const std::uint64_t> dense_row(VertexId v, Layer layer) const {
    const Adjacency& a = layers_[index(layer)];
    if (a.rows.empty()) return {};
    return {a.rows.data() + v * a.row_words, a.row_words};
  }

  // |N(v) ∩ marks| through the active SIMD kernels.
  std::size_t count_marked_neighbors(VertexId v, Layer layer, const VertexBitset& marks) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(std::string_view label) const;

  // Convenience for fixtures: maps labels to a sorted vertex set; throws
  // std::out_of_range on an unknown label.
  VertexSet vertex_set(std::initializer_list<std::string_view> labels) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<IdEdge> edges(Layer layer) const;

  const LoadReport& load_report() const { return report_; }

 private:
  struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<VertexId> targets;
    std::vector<std::uint64_t> rows;  // empty above kDenseRowLimit
    std::size_t row_words = 0;
    std::size_t edge_count = 0;
  };

  static Adjacency build(std::size_t n, std::span<const IdEdge> edges, std::size_t& self_loops,
                         std::size_t& duplicates);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
  std::array<Adjacency, 2> layers_;
  LoadReport report_;
};

LayerPair load_layer_pair(const EdgeList& first, const EdgeList& second);

// |N_layer(v) ∩ S| by sorted merge. v itself may or may not be in S.
std::size_t degree_within(const LayerPair& graphs, VertexId v, std::span<const VertexId> set, Layer layer);

// Number of edges of `layer` with both endpoints in S.
std::size_t edges_within(const LayerPair& graphs, std::span<const VertexId> set, Layer layer);

// Number of edges of `layer` between disjoint sets A and B. Throws
// std::invalid_argument when the sets overlap.
std::size_t edges_between(const LayerPair& graphs, std::span<const VertexId> a, std::span<const VertexId> b,
                          Layer layer);

// Minimum internal degree over |S| - 1. Throws std::domain_error when |S| < 2.
Rational gamma_density(const LayerPair& graphs, std::span<const VertexId> set, Layer layer);

// 2|E(S)| / (|S| (|S| - 1)). Throws std::domain_error when |S| < 2.
Rational alpha_density(const LayerPair& graphs, std::span<const VertexId> set, Layer layer);

// Replaces the edge set of `which` by all non-edges (no self-loops); the other
// layer and the vertex universe are unchanged.
LayerPair complement(const LayerPair& graphs, Layer which);

}  // namespace cqc
