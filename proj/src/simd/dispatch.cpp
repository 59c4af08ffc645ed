#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cqc/simd/kernels.hpp"

namespace cqc::simd {

#if defined(CQC_HAVE_AVX2)
const KernelTable* avx2_table_if_compiled();
#endif

bool cpu_supports_avx2() {
#if defined(CQC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(CQC_HAVE_AVX2)
  static const bool supported = cpu_supports_avx2();
  return supported ? avx2_table_if_compiled() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* initial_table() {
  const char* forced = std::getenv("CQC_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") return &scalar_kernels();
  if (const KernelTable* avx2 = avx2_kernels()) return avx2;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  if (isa == Isa::kScalar) {
    current().store(&scalar_kernels(), std::memory_order_release);
    return;
  }
  const KernelTable* avx2 = avx2_kernels();
  if (avx2 == nullptr) throw std::runtime_error("AVX2 kernels are not available on this machine");
  current().store(avx2, std::memory_order_release);
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace cqc::simd
