#include <atomic>
#include <cstdlib>
#include <string_view>

#include "ovf/kernels.hpp"

namespace ovf::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(OVF_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("OVF_KERNEL"); env != nullptr && std::string_view(env) == "scalar") {
    return Isa::Scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
  static const Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept {
  if (active_isa() == Isa::Avx2) {
    avx2::caxpy(n, a, x, y);
  } else {
    scalar::caxpy(n, a, x, y);
  }
}

void cgemm_acc(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda,
               const cplx* b, std::size_t ldb, cplx* c, std::size_t ldc) noexcept {
  if (active_isa() == Isa::Avx2) {
    avx2::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
  } else {
    scalar::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
  }
}

}  // namespace ovf::kernels
