#pragma once

// Data-parallel inner loops of the miner. Every kernel has a portable scalar
// reference; the AVX2 table is picked at startup when the CPU supports it.
// Set CQC_SIMD=scalar (or avx2) in the environment to force a choice.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cqc::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // popcount(a & b) over `words` 64-bit words.
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // Number of ids whose bit is set in `bits` (bit i lives in word i / 64).
  std::size_t (*count_marked)(const std::uint32_t* ids, std::size_t count, const std::uint64_t* bits);
  // Sum of max(0, values[k]).
  std::int64_t (*positive_sum)(const std::int32_t* values, std::size_t count);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

bool cpu_supports_avx2();

// Currently selected table.
const KernelTable& active();

// Throws std::runtime_error if `isa` is unavailable on this machine.
void select(Isa isa);

std::string_view name(Isa isa);

}  // namespace cqc::simd
