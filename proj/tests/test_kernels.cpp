#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "cqc/simd/kernels.hpp"

using namespace cqc::simd;

namespace {

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const KernelTable* avx2 = avx2_kernels()) out.push_back(avx2);
  return out;
}

}  // namespace

TEST_CASE("and_popcount agrees with the scalar reference on every length") {
  std::mt19937_64 rng(11);
  for (std::size_t words = 0; words < 70; ++words) {
    std::vector<std::uint64_t> a(words);
    std::vector<std::uint64_t> b(words);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng() & rng();
    const std::size_t expect = scalar_kernels().and_popcount(a.data(), b.data(), words);
    std::size_t naive = 0;
    for (std::size_t i = 0; i < words; ++i) naive += __builtin_popcountll(a[i] & b[i]);
    CHECK(expect == naive);
    for (const KernelTable* t : tables()) CHECK(t->and_popcount(a.data(), b.data(), words) == expect);
  }
}

TEST_CASE("count_marked agrees with the scalar reference") {
  std::mt19937_64 rng(12);
  const std::size_t universe = 1000;
  std::vector<std::uint64_t> bits((universe + 63) / 64);
  for (auto& w : bits) w = rng() & rng();
  for (std::size_t count = 0; count < 100; count += 3) {
    std::vector<std::uint32_t> ids(count);
    for (auto& id : ids) id = static_cast<std::uint32_t>(rng() % universe);
    // Include the last valid id to exercise the upper edge of the bitmap.
    if (count > 0) ids.back() = universe - 1;
    std::size_t naive = 0;
    for (auto id : ids) naive += (bits[id >> 6] >> (id & 63)) & 1u;
    for (const KernelTable* t : tables()) CHECK(t->count_marked(ids.data(), ids.size(), bits.data()) == naive);
  }
}

TEST_CASE("positive_sum agrees with the scalar reference, including extremes") {
  std::mt19937_64 rng(13);
  for (std::size_t len = 0; len < 90; ++len) {
    std::vector<std::int32_t> v(len);
    for (auto& x : v) x = static_cast<std::int32_t>(rng());
    if (len > 2) {
      v[0] = INT32_MAX;
      v[1] = INT32_MIN;
      v[2] = INT32_MAX;
    }
    std::int64_t naive = 0;
    for (auto x : v) naive += x > 0 ? x : 0;
    for (const KernelTable* t : tables()) CHECK(t->positive_sum(v.data(), v.size()) == naive);
  }
}

TEST_CASE("dispatch can be forced to each available instruction set") {
  const Isa original = active().isa;
  select(Isa::kScalar);
  CHECK(active().isa == Isa::kScalar);
  if (avx2_kernels()) {
    select(Isa::kAvx2);
    CHECK(active().isa == Isa::kAvx2);
  } else {
    CHECK_THROWS_AS(select(Isa::kAvx2), std::runtime_error);
  }
  select(original);
  CHECK(name(Isa::kScalar) == "scalar");
}
