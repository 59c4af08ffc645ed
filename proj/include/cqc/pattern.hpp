#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cqc/graph.hpp"
#include "cqc/rational.hpp"

namespace cqc {

struct MiningParams {
  Rational delta{1, 2};        // quasi-clique threshold, (0, 1]
  Rational delta_prime{0};     // contrast must be strictly above this, [0, 1)
  Rational redundancy{1, 10};  // r, (0, 1]
  std::size_t min_size = 4;    // smaller sets score -1
  Rational base_gamma{1, 2};   // sets whose best gamma is below this score -1

  // Search toggles. None of them changes the mined patterns.
  bool candidate_pruning = true;
  bool bound_pruning = true;
  bool diameter_pruning = true;

  // Throws std::invalid_argument when a value is out of range.
  void validate() const;

  // Every set with positive interestingness is a quasi-clique at this
  // threshold in at least one layer.
  Rational effective_delta() const { return delta > base_gamma ? delta : base_gamma; }
};

struct Pattern {
  VertexSet vertices;
  std::array<std::size_t, 2> edges{0, 0};
  std::array<Rational, 2> gamma;
  std::array<Rational, 2> alpha;
  Rational contrast;
  Rational interestingness;
  bool cqc = false;  // passes the (delta, delta') contrasting quasi-clique test

  std::size_t size() const { return vertices.size(); }
  // The layer with more internal edges. Only meaningful when contrast > 0.
  Layer dense_layer() const { return edges[1] > edges[0] ? Layer::kSecond : Layer::kFirst; }
  // Valid and worth reporting: a contrasting quasi-clique with I > 0.
  bool interesting() const { return cqc && interestingness > 0; }
};

// Computes every cached field from the graphs. Requires |vertices| >= 2
// (std::domain_error otherwise); `vertices` must be sorted and unique.
Pattern make_pattern(const LayerPair& graphs, VertexSet vertices, const MiningParams& params);

// Every member has at least ceil(delta (|S| - 1)) neighbours inside S.
bool is_delta_quasi_clique(const LayerPair& graphs, std::span<const VertexId> set, Layer layer,
                           const Rational& delta);

// |alpha_1(S) - alpha_2(S)|.
Rational contrast(const LayerPair& graphs, std::span<const VertexId> set);

bool is_cqc(const LayerPair& graphs, std::span<const VertexId> set, const MiningParams& params);

// |S| * contrast(S), or -1 when |S| < min_size or neither layer reaches base_gamma.
Rational interestingness(const LayerPair& graphs, std::span<const VertexId> set, const MiningParams& params);

// O is redundant to P: O != P, I(O) <= I(P), and on average over the two
// layers at least a fraction r of O's edges are also edges of P. A layer where
// O has no edges counts as fully covered.
bool is_redundant(const LayerPair& graphs, const Pattern& o, const Pattern& p, const Rational& r);

// Accepted patterns, pairwise non-redundant, in acceptance order.
class ResultSet {
 public:
  // Appends `candidate` unless it is redundant to, or made redundant by, an
  // accepted pattern, or already accepted. Earlier acceptances win ties.
  bool try_accept(const LayerPair& graphs, const Pattern& candidate, const Rational& r);

  const std::vector<Pattern>& patterns() const { return accepted_; }
  std::size_t size() const { return accepted_.size(); }
  bool empty() const { return accepted_.empty(); }
  auto begin() const { return accepted_.begin(); }
  auto end() const { return accepted_.end(); }

 private:
  std::vector<Pattern> accepted_;
};

// Ordering used both for emission ties and the oracle's greedy pass:
// interestingness descending, then size ascending, then lexicographic ids.
bool emission_before(const Pattern& a, const Pattern& b);

}  // namespace cqc
