// Compiled with -mavx2 only when the toolchain targets x86-64; the dispatcher
// never calls into this file on a CPU without AVX2.

#include "ovf/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace ovf::kernels::avx2 {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d x) noexcept {
  const __m256d t1 = _mm256_mul_pd(ar, x);                       // ar*xr, ar*xi
  const __m256d xs = _mm256_permute_pd(x, 0b0101);               // xi, xr
  const __m256d t2 = _mm256_mul_pd(ai, xs);                      // ai*xi, ai*xr
  return _mm256_addsub_pd(t1, t2);                               // ar*xr - ai*xi, ar*xi + ai*xr
}

}  // namespace

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x0 = _mm256_loadu_pd(xd + 2 * j);
    const __m256d x1 = _mm256_loadu_pd(xd + 2 * j + 4);
    const __m256d y0 = _mm256_loadu_pd(yd + 2 * j);
    const __m256d y1 = _mm256_loadu_pd(yd + 2 * j + 4);
    _mm256_storeu_pd(yd + 2 * j, _mm256_add_pd(y0, cmul_bcast(ar, ai, x0)));
    _mm256_storeu_pd(yd + 2 * j + 4, _mm256_add_pd(y1, cmul_bcast(ar, ai, x1)));
  }
  for (; j + 2 <= n; j += 2) {
    const __m256d x0 = _mm256_loadu_pd(xd + 2 * j);
    const __m256d y0 = _mm256_loadu_pd(yd + 2 * j);
    _mm256_storeu_pd(yd + 2 * j, _mm256_add_pd(y0, cmul_bcast(ar, ai, x0)));
  }
  if (j < n) scalar::caxpy(n - j, a, x + j, y + j);
}

void cgemm_acc(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda,
               const cplx* b, std::size_t ldb, cplx* c, std::size_t ldc) noexcept {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* ci = c + i * ldc;
    const cplx* ai = a + i * lda;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = ai[p];
      if (aip.real() == 0.0 && aip.imag() == 0.0) continue;
      caxpy(n, aip, b + p * ldb, ci);
    }
  }
}

}  // namespace ovf::kernels::avx2

#else

namespace ovf::kernels::avx2 {

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept { scalar::caxpy(n, a, x, y); }

void cgemm_acc(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda,
               const cplx* b, std::size_t ldb, cplx* c, std::size_t ldc) noexcept {
  scalar::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
}

}  // namespace ovf::kernels::avx2

#endif
