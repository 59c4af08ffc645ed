#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cqc/graph.hpp"
#include "cqc/pattern.hpp"
#include "cqc/rational.hpp"

namespace cqc {

// A subtree of the joint set enumeration tree: every set X with
// members ⊂ X ⊆ members ∪ candidates[0] ∪ candidates[1].
struct SearchNode {
  VertexSet members;                    // O
  std::array<VertexSet, 2> candidates;  // per-layer extension candidates, disjoint from O
  VertexSet excluded;                   // branches already split off at this node
  Priority bound;                       // I*(O) when the node was enqueued

  bool exhausted() const { return candidates[0].empty() && candidates[1].empty(); }
  // O ∪ cand_1 ∪ cand_2.
  VertexSet scope() const;
};

// O = ∅ with every vertex a candidate in both layers; bound +inf.
SearchNode root_node(const LayerPair& graphs);

// d_ij(O): upper bound on |E_i(X)| - |E_j(X)| over all X with
// O ⊂ X ⊆ O ∪ cand_{O,i}. Halves are kept exact.
Rational edge_diff_bound(const LayerPair& graphs, const SearchNode& node, Layer i, Layer j);

// Same bound over X ⊆ O ∪ cand_{O,scope}; edge_diff_bound(i, j) uses scope i.
Rational edge_diff_bound(const LayerPair& graphs, const SearchNode& node, Layer i, Layer j, Layer scope);

// I*(O): upper bound on I(X) for every interesting X strictly inside the
// subtree. (2 / |O|) times the largest edge-difference bound over both
// directions within each non-empty candidate scope; +inf at the root.
Priority interestingness_bound(const LayerPair& graphs, const SearchNode& node);

// Shrinks the candidate sets to vertices that can still belong to a
// quasi-clique X ⊋ O (threshold params.effective_delta(), |X| >= min_size)
// of the respective layer. Iterates to a fixpoint. Returns how many
// candidate entries were removed over both layers.
std::size_t prune_candidates(const LayerPair& graphs, SearchNode& node, const MiningParams& params);

struct Expansion {
  VertexId chosen = 0;
  std::optional<Pattern> pattern;   // O ∪ {chosen}, when it is an interesting CQC
  std::vector<SearchNode> subtrees; // child at O ∪ {chosen}, residual at O without the branch
};

// Branches on the candidate with the most neighbours in O (summed over both
// layers, ties to the smaller id). Subtrees come back unpruned, without bound,
// and may be exhausted. Throws std::logic_error if the node has no candidates.
Expansion expand(const LayerPair& graphs, const SearchNode& node, const MiningParams& params);

struct MineStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t patterns_emitted = 0;
  std::uint64_t patterns_accepted = 0;
  std::uint64_t subtrees_pruned_by_bound = 0;
  std::uint64_t candidates_pruned = 0;
  std::uint64_t max_queue_size = 0;
  double wall_time_ms = 0.0;
  bool completed = true;  // false when a SearchLimits budget stopped the run
};

// Test and instrumentation hooks; any member may be empty.
struct MineObserver {
  std::function<void(const VertexSet&)> on_visit;
  std::function<void(const SearchNode&)> on_enqueue;
  std::function<void(const Pattern&)> on_emit;
  std::function<void(const Pattern&, bool)> on_offer;
};

// Optional budget. A stopped run returns what was accepted so far with
// stats.completed == false; the result is then not guaranteed maximal.
struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0.0;     // 0 = unlimited
};

struct MineResult {
  ResultSet result;
  MineStats stats;
};

// Best-first traversal: pops the item with the highest (actual or bounded)
// interestingness; patterns go through the redundancy filter, subtrees are
// expanded. Accepted patterns come out in non-increasing interestingness.
MineResult mine(const LayerPair& graphs, const MiningParams& params, const MineObserver* observer = nullptr,
                SearchLimits limits = {});

// Every vertex set of size >= min_size that is a delta-quasi-clique in both
// layers (the dense cross-graph problem). Used by the complement baseline.
struct CrossGraphResult {
  std::vector<VertexSet> quasi_cliques;
  MineStats stats;
};
CrossGraphResult enumerate_cross_graph(const LayerPair& graphs, const MiningParams& params,
                                       SearchLimits limits = {});

}  // namespace cqc
