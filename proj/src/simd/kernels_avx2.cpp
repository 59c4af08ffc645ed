// Compiled with -mavx2 -mpopcnt; only reached through the dispatch table after
// a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "cqc/simd/kernels.hpp"

namespace cqc::simd {

namespace {

// Nibble-lookup popcount (Mula), four 64-bit lanes at a time.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::uint64_t horizontal_sum_u64(__m256i v) {
  __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    __m256i counts = popcount_bytes(_mm256_and_si256(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum_u64(acc);
  for (; w < words; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

// Gathers the 32-bit word holding each id's bit; relies on little-endian
// layout so bit i of the uint64 array is bit (i & 31) of 32-bit word i >> 5.
std::size_t count_marked_avx2(const std::uint32_t* ids, std::size_t count, const std::uint64_t* bits) {
  const int* words32 = reinterpret_cast<const int*>(bits);
  const __m256i low5 = _mm256_set1_epi32(31);
  const __m256i one = _mm256_set1_epi32(1);
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ids + k));
    __m256i word = _mm256_i32gather_epi32(words32, _mm256_srli_epi32(idx, 5), 4);
    __m256i bit = _mm256_and_si256(_mm256_srlv_epi32(word, _mm256_and_si256(idx, low5)), one);
    acc = _mm256_add_epi32(acc, bit);
  }
  __m128i s = _mm_add_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
  s = _mm_hadd_epi32(s, s);
  s = _mm_hadd_epi32(s, s);
  std::size_t total = static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
  for (; k < count; ++k) total += (bits[ids[k] >> 6] >> (ids[k] & 63)) & 1u;
  return total;
}

std::int64_t positive_sum_avx2(const std::int32_t* values, std::size_t count) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i v = _mm256_max_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + k)), zero);
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  std::int64_t total = static_cast<std::int64_t>(horizontal_sum_u64(acc));
  for (; k < count; ++k) total += values[k] > 0 ? values[k] : 0;
  return total;
}

constexpr KernelTable kAvx2Table{Isa::kAvx2, and_popcount_avx2, count_marked_avx2, positive_sum_avx2};

}  // namespace

const KernelTable* avx2_table_if_compiled() { return &kAvx2Table; }

}  // namespace cqc::simd
