#include "cqc/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <variant>

#include "cqc/simd/kernels.hpp"

namespace cqc {

namespace {

// Zeroed bitmaps over the vertex universe, reused across calls on one thread.
// Every user clears the bits it set before returning.
VertexBitset& scratch(std::size_t slot, std::size_t universe) {
  thread_local std::array<VertexBitset, 3> pool;
  VertexBitset& bits = pool[slot];
  if (bits.word_count() != (universe + 63) / 64) bits = VertexBitset(universe);
  return bits;
}

// delta = p / q with 0 < p <= q.
class Threshold {
 public:
  explicit Threshold(const Rational& delta) : p_(delta.numerator()), q_(delta.denominator()) {}

  // ceil(delta (k - 1)): the internal degree every member of a size-k
  // quasi-clique needs.
  std::int64_t need(std::int64_t k) const {
    __int128 num = static_cast<__int128>(p_) * (k - 1);
    return static_cast<std::int64_t>((num + q_ - 1) / q_);
  }

  // Largest k with need(k) <= degree.
  std::int64_t max_size_for(std::int64_t degree) const {
    return static_cast<std::int64_t>(static_cast<__int128>(q_) * degree / p_) + 1;
  }

  // Smallest k for which a member with `inside` neighbours in the current m
  // members can reach need(k) when all k - m added vertices are its
  // neighbours. nullopt when no k works (only possible for delta = 1).
  std::optional<std::int64_t> rising_start(std::int64_t m, std::int64_t inside) const {
    if (p_ == q_) {
      if (inside + 1 >= m) return std::numeric_limits<std::int64_t>::min() / 4;
      return std::nullopt;
    }
    __int128 num = static_cast<__int128>(q_) * (m - inside) - p_;
    __int128 den = q_ - p_;
    __int128 k = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    return static_cast<std::int64_t>(k);
  }

  bool at_least_half() const { return 2 * static_cast<__int128>(p_) >= q_; }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

struct PruneRules {
  bool degree = true;
  bool diameter = false;
};

// Candidate filter for one layer: drops every v in `cand` that cannot be part
// of a quasi-clique X with members ∪ {v} ⊆ X ⊆ members ∪ cand and
// |X| >= min_size. Empties `cand` when no such X exists at all.
std::size_t prune_layer(const LayerPair& g, std::span<const VertexId> members, VertexSet& cand, Layer layer,
                        const Threshold& th, std::size_t min_size, PruneRules rules) {
  const std::size_t before = cand.size();
  if (cand.empty() || (!rules.degree && !rules.diameter)) return 0;
  const std::size_t n = g.vertex_count();
  const auto m = static_cast<std::int64_t>(members.size());
  const bool use_diameter = rules.diameter && m > 0 && th.at_least_half();
  VertexBitset& in_o = scratch(0, n);
  VertexBitset& in_c = scratch(1, n);
  ScopedMarks mark_members(in_o, members);
  // Per-thread buffers; prune_layer never re-enters itself.
  thread_local struct {
    VertexSet original;
    std::vector<std::int32_t> d_o, d_c;
    std::vector<char> alive;
    std::vector<std::int64_t> inside, outside, prefix;
    std::vector<std::size_t> buckets, dropped;
    std::vector<std::uint64_t> reach;
  } buf;
  buf.original.assign(cand.begin(), cand.end());
  const VertexSet& original = buf.original;
  ScopedMarks mark_cand(in_c, original);  // removed vertices are unmarked early; clearing is idempotent

  // Position of each candidate (>= 0) or member (-2 - index); -1 otherwise.
  thread_local std::vector<std::int32_t> pos;
  if (pos.size() < n) pos.assign(n, -1);
  struct PositionReset {
    std::span<const VertexId> a;
    std::span<const VertexId> b;
    ~PositionReset() {
      for (VertexId v : a) pos[v] = -1;
      for (VertexId v : b) pos[v] = -1;
    }
  } reset_positions{original, members};
  const std::size_t c = cand.size();
  for (std::size_t i = 0; i < c; ++i) pos[cand[i]] = static_cast<std::int32_t>(i);
  for (std::size_t k = 0; k < members.size(); ++k) pos[members[k]] = -2 - static_cast<std::int32_t>(k);

  std::vector<std::int32_t>& d_o = buf.d_o;
  std::vector<std::int32_t>& d_c = buf.d_c;
  std::vector<char>& alive = buf.alive;
  d_o.resize(c);
  d_c.resize(c);
  alive.assign(c, 1);
  for (std::size_t i = 0; i < c; ++i) {
    d_o[i] = static_cast<std::int32_t>(g.count_marked_neighbors(cand[i], layer, in_o));
    d_c[i] = static_cast<std::int32_t>(g.count_marked_neighbors(cand[i], layer, in_c));
  }
  std::vector<std::int64_t>& inside = buf.inside;
  std::vector<std::int64_t>& outside = buf.outside;
  inside.resize(members.size());
  outside.resize(members.size());
  std::int64_t inside_sum = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    inside[k] = static_cast<std::int64_t>(g.count_marked_neighbors(members[k], layer, in_o));
    outside[k] = static_cast<std::int64_t>(g.count_marked_neighbors(members[k], layer, in_c));
    inside_sum += inside[k];
  }

  std::size_t live = c;
  std::vector<std::size_t>& buckets = buf.buckets;
  std::vector<std::int64_t>& prefix = buf.prefix;
  std::vector<std::uint64_t>& reach = buf.reach;
  std::vector<std::size_t>& dropped = buf.dropped;
  bool wipe = false;

  while (live > 0) {
    dropped.clear();
    if (rules.degree) {
      bool feasible = true;
      std::int64_t k_lo = std::max<std::int64_t>(m + 1, static_cast<std::int64_t>(min_size));
      std::int64_t k_hi = m + static_cast<std::int64_t>(live);
      for (std::size_t k = 0; k < members.size(); ++k) {
        k_hi = std::min(k_hi, th.max_size_for(inside[k] + outside[k]));
        auto start = th.rising_start(m, inside[k]);
        if (!start || *start > m + outside[k]) {
          feasible = false;
          break;
        }
        k_lo = std::max(k_lo, *start);
      }
      // Members need m * need(k) internal degree in total; added vertices can
      // contribute at most their degrees into O, best ones first.
      if (feasible && m > 0 && k_lo <= k_hi) {
        // d_o <= m, so a bucket pass replaces sorting.
        buckets.assign(static_cast<std::size_t>(m) + 1, 0);
        for (std::size_t i = 0; i < c; ++i) {
          if (alive[i]) ++buckets[static_cast<std::size_t>(d_o[i])];
        }
        prefix.assign(live + 1, 0);
        std::size_t filled = 0;
        for (std::int64_t d = m; d >= 0; --d) {
          for (std::size_t b = buckets[static_cast<std::size_t>(d)]; b > 0; --b, ++filled) {
            prefix[filled + 1] = prefix[filled] + d;
          }
        }
        auto reachable = [&](std::int64_t t) { return inside_sum + prefix[t] >= m * th.need(m + t); };
        std::int64_t t = k_lo - m;
        while (t <= k_hi - m && !reachable(t)) ++t;
        k_lo = m + t;
        t = k_hi - m;
        while (t >= k_lo - m && !reachable(t)) --t;
        k_hi = m + t;
      }
      if (!feasible || k_lo > k_hi) {
        wipe = true;
        break;
      }
      // A candidate's best case over [k_lo, k_hi] is at the clamp of
      // m + 1 + d_c, where its attainable degree stops growing.
      for (std::size_t i = 0; i < c; ++i) {
        if (!alive[i]) continue;
        const std::int64_t k = std::clamp<std::int64_t>(m + 1 + d_c[i], k_lo, k_hi);
        if (d_o[i] + std::min<std::int64_t>(k - m - 1, d_c[i]) < th.need(k)) {
          alive[i] = 0;
          dropped.push_back(i);
        }
      }
    }

    // For delta >= 1/2 any two members of a quasi-clique are adjacent or share
    // a neighbour inside it.
    if (use_diameter) {
      for (VertexId u : members) {
        std::span<const std::uint64_t> row_u = g.dense_row(u, layer);
        if (!row_u.empty()) {
          reach.resize(row_u.size());
          for (std::size_t w = 0; w < row_u.size(); ++w) reach[w] = row_u[w] & (in_o.data()[w] | in_c.data()[w]);
        }
        for (std::size_t i = 0; i < c; ++i) {
          if (!alive[i]) continue;
          const VertexId v = cand[i];
          if (g.has_edge(u, v, layer)) continue;
          bool linked = false;
          if (!row_u.empty()) {
            std::span<const std::uint64_t> row_v = g.dense_row(v, layer);
            linked = simd::active().and_popcount(row_v.data(), reach.data(), reach.size()) > 0;
          } else {
            for (VertexId w : g.neighbors(v, layer)) {
              if ((in_o.test(w) || in_c.test(w)) && g.has_edge(u, w, layer)) {
                linked = true;
                break;
              }
            }
          }
          if (!linked) {
            alive[i] = 0;
            dropped.push_back(i);
          }
        }
      }
    }

    if (dropped.empty()) break;
    live -= dropped.size();
    std::size_t walk = 0;
    for (std::size_t i : dropped) {
      in_c.reset(cand[i]);
      walk += g.degree(cand[i], layer);
    }
    // Walking the dropped vertices' adjacency is cheaper unless they are
    // dense enough that a bitmap recount of the survivors wins.
    if (walk <= (live + members.size()) * std::max<std::size_t>(in_c.word_count() / 4, 1)) {
      for (std::size_t i : dropped) {
        for (VertexId w : g.neighbors(cand[i], layer)) {
          const std::int32_t p = pos[w];
          if (p >= 0) {
            if (alive[static_cast<std::size_t>(p)]) --d_c[static_cast<std::size_t>(p)];
          } else if (p <= -2) {
            --outside[static_cast<std::size_t>(-2 - p)];
          }
        }
      }
    } else {
      for (std::size_t i = 0; i < c; ++i) {
        if (alive[i]) d_c[i] = static_cast<std::int32_t>(g.count_marked_neighbors(cand[i], layer, in_c));
      }
      for (std::size_t k = 0; k < members.size(); ++k) {
        outside[k] = static_cast<std::int64_t>(g.count_marked_neighbors(members[k], layer, in_c));
      }
    }
  }

  if (wipe) {
    cand.clear();
    return before;
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < c; ++i) {
    if (alive[i]) cand[out++] = cand[i];
  }
  cand.resize(out);
  return before - cand.size();
}

// Twice the edge-difference bounds of one scope: [0] bounds E_s - E_o,
// [1] bounds E_o - E_s, where s is the scope layer and o the other one.
struct ScopeBounds {
  std::array<std::int64_t, 2> twice{0, 0};
};

struct NodeBounds {
  std::array<ScopeBounds, 2> scopes;
};

NodeBounds compute_bounds(const LayerPair& g, const SearchNode& node) {
  const std::size_t n = g.vertex_count();
  VertexBitset& in_o = scratch(0, n);
  ScopedMarks mark_members(in_o, node.members);
  std::array<std::int64_t, 2> edges_o{0, 0};
  for (Layer layer : kLayers) {
    std::int64_t twice = 0;
    for (VertexId u : node.members) twice += static_cast<std::int64_t>(g.count_marked_neighbors(u, layer, in_o));
    edges_o[index(layer)] = twice / 2;
  }

  NodeBounds out;
  std::vector<std::int32_t> forward;
  std::vector<std::int32_t> backward;
  VertexBitset& in_c = scratch(1, n);
  for (Layer s : kLayers) {
    const Layer o = other(s);
    const VertexSet& cand = node.candidates[index(s)];
    const std::int64_t diff = edges_o[index(s)] - edges_o[index(o)];
    std::int64_t sum_forward = 0;
    std::int64_t sum_backward = 0;
    if (!cand.empty()) {
      ScopedMarks mark_cand(in_c, cand);
      forward.resize(cand.size());
      backward.resize(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        const VertexId v = cand[i];
        const auto o_s = static_cast<std::int32_t>(g.count_marked_neighbors(v, s, in_o));
        const auto o_o = static_cast<std::int32_t>(g.count_marked_neighbors(v, o, in_o));
        const auto c_s = static_cast<std::int32_t>(g.count_marked_neighbors(v, s, in_c));
        const auto c_o = static_cast<std::int32_t>(g.count_marked_neighbors(v, o, in_c));
        forward[i] = 2 * (o_s - o_o) + c_s;
        backward[i] = 2 * (o_o - o_s) + c_o;
      }
      const simd::KernelTable& k = simd::active();
      sum_forward = k.positive_sum(forward.data(), forward.size());
      sum_backward = k.positive_sum(backward.data(), backward.size());
    }
    out.scopes[index(s)].twice = {2 * diff + sum_forward, -2 * diff + sum_backward};
  }
  return out;
}

VertexSet without(const VertexSet& set, VertexId v) {
  VertexSet out;
  out.reserve(set.size());
  for (VertexId x : set) {
    if (x != v) out.push_back(x);
  }
  return out;
}

VertexSet with(const VertexSet& set, VertexId v) {
  VertexSet out = set;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

// The candidate with the most neighbours in `members` over both layers;
// smallest id on ties. `pool` must be non-empty and sorted.
VertexId pick_branch_vertex(const LayerPair& g, std::span<const VertexId> members, std::span<const VertexId> pool) {
  VertexBitset& in_o = scratch(0, g.vertex_count());
  ScopedMarks mark_members(in_o, members);
  VertexId best = pool.front();
  std::size_t best_degree = 0;
  bool first = true;
  for (VertexId v : pool) {
    std::size_t d = g.count_marked_neighbors(v, Layer::kFirst, in_o) + g.count_marked_neighbors(v, Layer::kSecond, in_o);
    if (first || d > best_degree) {
      best = v;
      best_degree = d;
      first = false;
    }
  }
  return best;
}

class Clock {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool over_budget(const SearchLimits& limits, const MineStats& stats, const Clock& clock) {
  if (limits.max_nodes != 0 && stats.nodes_visited >= limits.max_nodes) return true;
  if (limits.max_seconds > 0 && (stats.nodes_visited & 255) == 0 &&
      clock.elapsed_ms() >= limits.max_seconds * 1000.0) {
    return true;
  }
  return false;
}

// Max-priority work list of patterns and subtrees. At equal priority
// subtrees pop first, so a pattern is only released once no pending subtree
// can hold anything at least as interesting; then smaller sets, then
// lexicographically smaller ones.
class WorkQueue {
 public:
  using Item = std::variant<Pattern, SearchNode>;

  void push(Item item) {
    Entry e;
    if (const auto* p = std::get_if<Pattern>(&item)) {
      e.priority = Priority(p->interestingness);
      e.is_pattern = true;
      e.size = p->size();
    } else {
      const auto& node = std::get<SearchNode>(item);
      e.priority = node.bound;
      e.is_pattern = false;
      e.size = node.members.size();
    }
    if (free_.empty()) {
      e.slot = static_cast<std::uint32_t>(slots_.size());
      slots_.push_back(std::move(item));
    } else {
      e.slot = free_.back();
      free_.pop_back();
      slots_[e.slot] = std::move(item);
    }
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end(), Later{this});
  }

  Item pop() {
    std::pop_heap(heap_.begin(), heap_.end(), Later{this});
    const std::uint32_t slot = heap_.back().slot;
    heap_.pop_back();
    Item item = std::move(slots_[slot]);
    slots_[slot] = Pattern{};
    free_.push_back(slot);
    return item;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Entry {
    Priority priority;
    bool is_pattern = false;
    std::size_t size = 0;
    std::uint32_t slot = 0;
  };

  const VertexSet& vertices(std::uint32_t slot) const {
    const Item& item = slots_[slot];
    if (const auto* p = std::get_if<Pattern>(&item)) return p->vertices;
    return std::get<SearchNode>(item).members;
  }

  bool pops_before(const Entry& a, const Entry& b) const {
    if (!(a.priority == b.priority)) return b.priority < a.priority;
    if (a.is_pattern != b.is_pattern) return !a.is_pattern;
    if (a.size != b.size) return a.size < b.size;
    return vertices(a.slot) < vertices(b.slot);
  }

  struct Later {
    const WorkQueue* q;
    bool operator()(const Entry& a, const Entry& b) const { return q->pops_before(b, a); }
  };

  std::vector<Item> slots_;
  std::vector<std::uint32_t> free_;
  std::vector<Entry> heap_;
};

}  // namespace

VertexSet SearchNode::scope() const {
  VertexSet both;
  std::set_union(candidates[0].begin(), candidates[0].end(), candidates[1].begin(), candidates[1].end(),
                 std::back_inserter(both));
  VertexSet out;
  std::set_union(members.begin(), members.end(), both.begin(), both.end(), std::back_inserter(out));
  return out;
}

SearchNode root_node(const LayerPair& graphs) {
  SearchNode root;
  VertexSet all(graphs.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  root.candidates = {all, all};
  root.bound = Priority::infinity();
  return root;
}

Rational edge_diff_bound(const LayerPair& graphs, const SearchNode& node, Layer i, Layer j, Layer scope) {
  if (i == j) throw std::invalid_argument("edge_diff_bound needs two different layers");
  const NodeBounds b = compute_bounds(graphs, node);
  return Rational(b.scopes[index(scope)].twice[i == scope ? 0 : 1], 2);
}

Rational edge_diff_bound(const LayerPair& graphs, const SearchNode& node, Layer i, Layer j) {
  return edge_diff_bound(graphs, node, i, j, i);
}

Priority interestingness_bound(const LayerPair& graphs, const SearchNode& node) {
  if (node.members.empty()) return Priority::infinity();
  const NodeBounds b = compute_bounds(graphs, node);
  std::optional<std::int64_t> best;
  for (Layer s : kLayers) {
    if (node.candidates[index(s)].empty()) continue;
    for (std::int64_t t : b.scopes[index(s)].twice) best = best ? std::max(*best, t) : t;
  }
  if (!best) return Priority(Rational(0));
  // I* = (2 / |O|) d, and `best` already holds 2 d.
  return Priority(Rational(*best, static_cast<std::int64_t>(node.members.size())));
}

std::size_t prune_candidates(const LayerPair& graphs, SearchNode& node, const MiningParams& params) {
  const Threshold th(params.effective_delta());
  const PruneRules rules{params.candidate_pruning, params.diameter_pruning};
  std::size_t removed = 0;
  for (Layer layer : kLayers) {
    removed += prune_layer(graphs, node.members, node.candidates[index(layer)], layer, th, params.min_size, rules);
  }
  return removed;
}

Expansion expand(const LayerPair& graphs, const SearchNode& node, const MiningParams& params) {
  if (node.exhausted()) throw std::logic_error("expand called on a node without candidates");
  VertexSet pool;
  std::set_union(node.candidates[0].begin(), node.candidates[0].end(), node.candidates[1].begin(),
                 node.candidates[1].end(), std::back_inserter(pool));

  Expansion e;
  e.chosen = pick_branch_vertex(graphs, node.members, pool);
  const VertexId u = e.chosen;
  VertexSet grown = with(node.members, u);
  if (grown.size() >= std::max<std::size_t>(2, params.min_size)) {
    Pattern p = make_pattern(graphs, grown, params);
    if (p.interesting()) e.pattern = std::move(p);
  }

  SearchNode child;
  child.members = std::move(grown);
  SearchNode residual;
  residual.members = node.members;
  residual.excluded = with(node.excluded, u);
  for (Layer layer : kLayers) {
    const VertexSet& cand = node.candidates[index(layer)];
    VertexSet rest = without(cand, u);
    // u outside cand_i means no quasi-clique of layer i contains O ∪ {u}.
    if (rest.size() != cand.size()) child.candidates[index(layer)] = rest;
    residual.candidates[index(layer)] = std::move(rest);
  }
  e.subtrees.push_back(std::move(child));
  e.subtrees.push_back(std::move(residual));
  return e;
}

MineResult mine(const LayerPair& graphs, const MiningParams& params, const MineObserver* observer,
                SearchLimits limits) {
  params.validate();
  const Clock clock;
  MineResult out;
  MineStats& stats = out.stats;
  WorkQueue queue;

  auto enqueue = [&](SearchNode node) {
    stats.candidates_pruned += prune_candidates(graphs, node, params);
    if (node.exhausted()) return;
    node.bound = interestingness_bound(graphs, node);
    if (params.bound_pruning && !node.bound.positive()) {
      ++stats.subtrees_pruned_by_bound;
      return;
    }
    if (observer && observer->on_enqueue) observer->on_enqueue(node);
    queue.push(std::move(node));
    stats.max_queue_size = std::max<std::uint64_t>(stats.max_queue_size, queue.size());
  };

  SearchNode root = root_node(graphs);
  stats.nodes_visited = 1;
  if (observer && observer->on_visit) observer->on_visit(root.members);
  enqueue(std::move(root));

  while (!queue.empty()) {
    if (over_budget(limits, stats, clock)) {
      stats.completed = false;
      break;
    }
    WorkQueue::Item item = queue.pop();
    if (auto* p = std::get_if<Pattern>(&item)) {
      const bool accepted = out.result.try_accept(graphs, *p, params.redundancy);
      if (accepted) ++stats.patterns_accepted;
      if (observer && observer->on_offer) observer->on_offer(*p, accepted);
      continue;
    }
    Expansion e = expand(graphs, std::get<SearchNode>(item), params);
    ++stats.nodes_visited;
    if (observer && observer->on_visit) observer->on_visit(e.subtrees.front().members);
    if (e.pattern) {
      ++stats.patterns_emitted;
      if (observer && observer->on_emit) observer->on_emit(*e.pattern);
      queue.push(std::move(*e.pattern));
    }
    for (SearchNode& sub : e.subtrees) enqueue(std::move(sub));
  }
  stats.wall_time_ms = clock.elapsed_ms();
  return out;
}

CrossGraphResult enumerate_cross_graph(const LayerPair& graphs, const MiningParams& params, SearchLimits limits) {
  params.validate();
  const Clock clock;
  const Threshold th(params.delta);
  const PruneRules rules{params.candidate_pruning, params.diameter_pruning};
  CrossGraphResult out;
  MineStats& stats = out.stats;

  struct Frame {
    VertexSet members;
    VertexSet cand;
  };
  // Both layers must stay quasi-cliques, so one joint candidate set is
  // filtered by each layer's rules in turn until neither removes anything.
  auto prune_joint = [&](Frame& f) {
    for (;;) {
      std::size_t removed = 0;
      for (Layer layer : kLayers) removed += prune_layer(graphs, f.members, f.cand, layer, th, params.min_size, rules);
      stats.candidates_pruned += removed;
      if (removed == 0) break;
    }
  };

  std::vector<Frame> stack;
  Frame root;
  root.cand = root_node(graphs).candidates[0];
  stats.nodes_visited = 1;
  prune_joint(root);
  if (!root.cand.empty()) stack.push_back(std::move(root));

  while (!stack.empty()) {
    if (over_budget(limits, stats, clock)) {
      stats.completed = false;
      break;
    }
    Frame f = std::move(stack.back());
    stack.pop_back();
    const VertexId u = pick_branch_vertex(graphs, f.members, f.cand);
    ++stats.nodes_visited;
    Frame child{with(f.members, u), without(f.cand, u)};
    if (child.members.size() >= std::max<std::size_t>(2, params.min_size) &&
        is_delta_quasi_clique(graphs, child.members, Layer::kFirst, params.delta) &&
        is_delta_quasi_clique(graphs, child.members, Layer::kSecond, params.delta)) {
      out.quasi_cliques.push_back(child.members);
      ++stats.patterns_emitted;
    }
    Frame residual{std::move(f.members), without(f.cand, u)};
    prune_joint(residual);
    if (!residual.cand.empty()) stack.push_back(std::move(residual));
    prune_joint(child);
    if (!child.cand.empty()) stack.push_back(std::move(child));
    stats.max_queue_size = std::max<std::uint64_t>(stats.max_queue_size, stack.size());
  }
  std::sort(out.quasi_cliques.begin(), out.quasi_cliques.end());
  stats.wall_time_ms = clock.elapsed_ms();
  return out;
}

}  // namespace cqc
