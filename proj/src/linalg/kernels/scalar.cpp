#include "ovf/kernels.hpp"

namespace ovf::kernels::scalar {

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = x[j].real();
    const double xi = x[j].imag();
    const double pr = ar * xr - ai * xi;
    const double pi = ar * xi + ai * xr;
    y[j] = cplx(y[j].real() + pr, y[j].imag() + pi);
  }
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

}  // namespace ovf::kernels::scalar
