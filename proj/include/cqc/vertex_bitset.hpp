#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cqc {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids. All public set arguments use this
// representation.
using VertexSet = std::vector<VertexId>;

// Fixed-universe membership bitmap used on the hot paths of the miner.
class VertexBitset {
 public:
  VertexBitset() = default;
  explicit VertexBitset(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void set(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

  void assign(std::span<const VertexId> ids) {
    for (VertexId v : ids) set(v);
  }
  // Clears only the listed bits; cheaper than a full wipe for small sets.
  void clear(std::span<const VertexId> ids) {
    for (VertexId v : ids) reset(v);
  }

  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

 private:
  std::vector<std::uint64_t> words_;
};

// Sets `ids` on construction and clears them again on destruction.
class ScopedMarks {
 public:
  ScopedMarks(VertexBitset& bits, std::span<const VertexId> ids) : bits_(bits), ids_(ids) {
    bits_.assign(ids_);
  }
  ~ScopedMarks() { bits_.clear(ids_); }
  ScopedMarks(const ScopedMarks&) = delete;
  ScopedMarks& operator=(const ScopedMarks&) = delete;

 private:
  VertexBitset& bits_;
  std::span<const VertexId> ids_;
};

}  // namespace cqc
