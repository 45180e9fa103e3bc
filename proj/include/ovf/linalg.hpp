#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "ovf/error.hpp"

namespace ovf {

using cplx = std::complex<double>;

/// Relative cutoff used for every rank and invertibility decision unless a
/// caller passes its own.
inline constexpr double kDefaultTol = 1e-8;

/// Dense complex matrix, row-major. The universal carrier for operators.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const cplx> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<cplx> entries() noexcept { return data_; }
  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src);

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

/// a* b without materializing the adjoint at the call site.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);
/// a b*.
ComplexMatrix times_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; index (i*b.rows + k, j*b.cols + l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double fro_norm(const ComplexMatrix& m);
/// Spectral norm (largest singular value).
double op_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
cplx trace(const ComplexMatrix& m);
/// ‖m - m*‖_F for square m.
double hermitian_defect(const ComplexMatrix& m);
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// ---------------------------------------------------------------------------
// Spectral routines

struct EigDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, column k pairs with eigenvalue k
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NonHermitian when ‖M - M*‖_F > tol·max(1, ‖M‖_F).
EigDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

/// V f(Λ) V* for a precomputed decomposition.
ComplexMatrix spectral_apply(const EigDecomposition& eig, std::span<const cplx> values);

/// M^p for Hermitian positive semidefinite M. Negative p requires the
/// smallest eigenvalue to exceed tol·‖M‖.
ComplexMatrix psd_power(const ComplexMatrix& m, double p, double tol = kDefaultTol);

/// Z = Y (Y*Y)^{-1/2} on the numerical range of Y*; eigenvalues of Y*Y at or
/// below tol·‖Y‖² are discarded.
ComplexMatrix polar_partial_isometry(const ComplexMatrix& y, double tol = kDefaultTol);

/// Orthogonal projection onto the range of m (numerical rank at tol).
ComplexMatrix range_projection(const ComplexMatrix& m, double tol = kDefaultTol);

/// Isometry whose columns are an orthonormal basis of range(m).
ComplexMatrix range_isometry(const ComplexMatrix& m, double tol = kDefaultTol);

std::size_t numerical_rank(const ComplexMatrix& m, double tol = kDefaultTol);

/// Singular values, ascending.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Hermitian H with exp(iH) = U and spectrum in (-π, π]. Throws NonUnitary.
ComplexMatrix unitary_log(const ComplexMatrix& u, double tol = kDefaultTol);

/// exp(iH) for Hermitian H, through its eigendecomposition.
ComplexMatrix expi_hermitian(const ComplexMatrix& h, double tol = kDefaultTol);

/// Inverse of a square matrix by Gauss-Jordan with partial pivoting.
ComplexMatrix inverse(const ComplexMatrix& m, double tol = kDefaultTol);

/// Least-squares solution X of A X = B via Householder QR (A has full column rank).
ComplexMatrix least_squares(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);

/// True when m - shift·I admits a Cholesky factorization (m Hermitian).
bool cholesky_succeeds(const ComplexMatrix& m, double shift);

// ---------------------------------------------------------------------------
// Seeded randomness

/// Deterministic source of standard complex normals (E|z|² = 1).
/// Bits come from std::mt19937_64 (fully specified by the standard), uniforms
/// from its top 53 bits, normals from the Box–Muller transform.
class ComplexNormalStream {
 public:
  explicit ComplexNormalStream(std::uint64_t seed);
  double uniform();  // [0, 1)
  double normal();   // N(0, 1)
  cplx next();       // re, im ~ N(0, 1/2)

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix seeded_random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);
ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, ComplexNormalStream& rng);
ComplexMatrix random_hermitian(std::size_t n, ComplexNormalStream& rng);
ComplexMatrix random_unitary(std::size_t n, ComplexNormalStream& rng);

}  // namespace ovf
