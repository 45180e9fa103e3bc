#include <doctest.h>

#include <cstring>

#include "../support/oracles.hpp"
#include "ovf/kernels.hpp"
#include "ovf/linalg.hpp"

using namespace ovf;

namespace {

bool same_bits(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.entries().data(), b.entries().data(), a.size() * sizeof(cplx)) == 0;
}

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("kernels: scalar caxpy matches the naive loop") {
  ComplexNormalStream rng(1);
  const ComplexMatrix x = random_matrix(1, 37, rng);
  ComplexMatrix y = random_matrix(1, 37, rng);
  ComplexMatrix expected = y;
  const cplx a(0.3, -1.7);
  for (std::size_t i = 0; i < 37; ++i) expected(0, i) += a * x(0, i);
  kernels::scalar::caxpy(37, a, x.entries().data(), y.entries().data());
  CHECK(ovf::testing::max_diff(y, expected) <= 1e-14);
}

TEST_CASE("kernels: avx2 caxpy is bit-identical to scalar for every tail length") {
  ComplexNormalStream rng(2);
  for (std::size_t n = 0; n <= 19; ++n) {
    const ComplexMatrix x = random_matrix(1, n + 1, rng);
    const ComplexMatrix y0 = random_matrix(1, n + 1, rng);
    const cplx a = rng.next();
    ComplexMatrix ys = y0, yv = y0;
    kernels::scalar::caxpy(n, a, x.entries().data(), ys.entries().data());
    kernels::avx2::caxpy(n, a, x.entries().data(), yv.entries().data());
    CHECK(same_bits(ys, yv));
  }
}

TEST_CASE("kernels: avx2 cgemm is bit-identical to scalar") {
  ComplexNormalStream rng(3);
  const std::size_t shapes[][3] = {{1, 1, 1}, {2, 3, 4}, {5, 7, 3}, {16, 16, 16}, {9, 33, 12}, {40, 6, 41}};
  for (const auto& s : shapes) {
    const ComplexMatrix a = random_matrix(s[0], s[2], rng);
    const ComplexMatrix b = random_matrix(s[2], s[1], rng);
    const ComplexMatrix c0 = random_matrix(s[0], s[1], rng);
    ComplexMatrix cs = c0, cv = c0;
    kernels::scalar::cgemm_acc(s[0], s[1], s[2], a.entries().data(), s[2], b.entries().data(), s[1],
                               cs.entries().data(), s[1]);
    kernels::avx2::cgemm_acc(s[0], s[1], s[2], a.entries().data(), s[2], b.entries().data(), s[1],
                             cv.entries().data(), s[1]);
    CHECK(same_bits(cs, cv));
    CHECK(ovf::testing::max_diff(cs - c0, ovf::testing::naive_product(a, b)) <= 1e-12);
  }
}

TEST_CASE("kernels: products with sparse operands agree across variants") {
  ComplexNormalStream rng(4);
  ComplexMatrix a = random_matrix(8, 8, rng);
  for (std::size_t i = 0; i < 8; ++i) a(i, (i * 3) % 8) = 0.0;
  const ComplexMatrix b = kron(ComplexMatrix::identity(2), random_matrix(4, 4, rng));
  IsaGuard guard;
  kernels::set_active_isa(kernels::Isa::Scalar);
  const ComplexMatrix ps = a * b;
  kernels::set_active_isa(kernels::Isa::Avx2);
  const ComplexMatrix pv = a * b;
  CHECK(same_bits(ps, pv));
}

TEST_CASE("kernels: higher-level routines are ISA independent") {
  ComplexNormalStream rng(5);
  const ComplexMatrix h = random_hermitian(12, rng);
  IsaGuard guard;
  kernels::set_active_isa(kernels::Isa::Scalar);
  const auto es = hermitian_eig(h);
  const ComplexMatrix ls = unitary_log(expi_hermitian(h));
  kernels::set_active_isa(kernels::Isa::Avx2);
  const auto ev = hermitian_eig(h);
  const ComplexMatrix lv = unitary_log(expi_hermitian(h));
  CHECK(es.eigenvalues == ev.eigenvalues);
  CHECK(same_bits(es.eigenvectors, ev.eigenvectors));
  CHECK(same_bits(ls, lv));
}

TEST_CASE("kernels: forcing an unavailable variant falls back to scalar") {
  IsaGuard guard;
  const kernels::Isa got = kernels::set_active_isa(kernels::Isa::Avx2);
  CHECK(got == kernels::detected_isa());
  CHECK(kernels::set_active_isa(kernels::Isa::Scalar) == kernels::Isa::Scalar);
}
