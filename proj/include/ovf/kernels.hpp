#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Inner loops of the dense complex products. Every variant evaluates
// c[j] += a * b[j] as (ar*br - ai*bi, ar*bi + ai*br) followed by one add, in
// the same per-element order, so all variants produce identical bits.

namespace ovf::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Best variant the running CPU supports.
Isa detected_isa() noexcept;

/// Variant currently used by the dispatching entry points. Initialized from
/// detected_isa(), or forced to scalar when OVF_KERNEL=scalar.
Isa active_isa() noexcept;

/// Force a variant; requests the CPU cannot execute fall back to scalar.
/// Returns the variant actually selected.
Isa set_active_isa(Isa isa) noexcept;

using cplx = std::complex<double>;

/// y[0..n) += a * x[0..n)
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept;

/// C(m×n) += A(m×k) · B(k×n), all row-major with leading dimensions.
/// Each C(i,j) accumulates over p = 0..k-1 in order.
void cgemm_acc(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda,
               const cplx* b, std::size_t ldb, cplx* c, std::size_t ldc) noexcept;

namespace scalar {
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept;
void cgemm_acc(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda,
               const cplx* b, std::size_t ldb, cplx* c, std::size_t ldc) noexcept;
}  // namespace scalar

namespace avx2 {
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) noexcept;
void cgemm_acc(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda,
               const cplx* b, std::size_t ldb, cplx* c, std::size_t ldc) noexcept;
}  // namespace avx2

}  // namespace ovf::kernels
