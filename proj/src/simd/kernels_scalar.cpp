#include <bit>

#include "cqc/simd/kernels.hpp"

namespace cqc::simd {

namespace {

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

std::size_t count_marked_scalar(const std::uint32_t* ids, std::size_t count, const std::uint64_t* bits) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < count; ++k) total += (bits[ids[k] >> 6] >> (ids[k] & 63)) & 1u;
  return total;
}

std::int64_t positive_sum_scalar(const std::int32_t* values, std::size_t count) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < count; ++k) total += values[k] > 0 ? values[k] : 0;
  return total;
}

constexpr KernelTable kScalarTable{Isa::kScalar, and_popcount_scalar, count_marked_scalar,
                                   positive_sum_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace cqc::simd
