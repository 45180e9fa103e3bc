#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ovf/linalg.hpp"

namespace ovf {

namespace {

constexpr int kMaxSweeps = 60;

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + " needs a square matrix, got " +
                                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += std::norm(a(p, q));
  return std::sqrt(2.0 * sum);
}

// One complex Jacobi rotation annihilating a(p,q). The 2x2 block is first made
// real by the phase of a(p,q), then rotated by the classical symmetric formula.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const cplx u = apq / b;
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double theta = (gamma - alpha) / (2.0 * b);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const cplx ub = std::conj(u);
  const cplx j00 = c, j01 = s, j10 = -s * ub, j11 = c * ub;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * j00 + akq * j10;
    a(k, q) = akp * j01 + akq * j11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
    a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = alpha - t * b;
  a(q, q) = gamma + t * b;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * j00 + vkq * j10;
    v(k, q) = vkp * j01 + vkq * j11;
  }
}

// Kept eigenpairs of a Gram matrix: eigenvalue above tol times the largest.
std::vector<std::size_t> kept_indices(const EigDecomposition& eig, double tol) {
  std::vector<std::size_t> kept;
  if (eig.eigenvalues.empty()) return kept;
  const double top = eig.eigenvalues.back();
  if (top <= 0.0) return kept;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
    if (eig.eigenvalues[k] > tol * top) kept.push_back(k);
  return kept;
}

ComplexMatrix select_columns(const ComplexMatrix& m, const std::vector<std::size_t>& cols) {
  ComplexMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) out(i, c) = m(i, cols[c]);
  return out;
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  require_square(m, "hermitian_eig");
  const std::size_t n = m.rows();
  const double scale = fro_norm(m);
  const double defect = hermitian_defect(m);
  if (defect > tol * std::max(1.0, scale)) {
    throw Error(ErrorKind::NonHermitian, "‖M - M*‖ = " + std::to_string(defect));
  }
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0 || off <= 1e-15 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > 1e-13 * scale) {
    throw Error(ErrorKind::NoConvergence, "Jacobi sweeps exhausted for n=" + std::to_string(n));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix spectral_apply(const EigDecomposition& eig, std::span<const cplx> values) {
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix scaled = v;
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t k = 0; k < v.cols(); ++k) scaled(i, k) *= values[k];
  return times_adjoint(scaled, v);
}

ComplexMatrix psd_power(const ComplexMatrix& m, double p, double tol) {
  require_square(m, "psd_power");
  const auto eig = hermitian_eig(m, tol);
  const double top = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
  const double bottom = eig.eigenvalues.front();
  if (bottom < -tol * std::max(top, 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "matrix is not positive semidefinite (min eigenvalue " +
                                                 std::to_string(bottom) + ")");
  }
  if (p < 0.0 && (top == 0.0 || bottom <= tol * top)) {
    throw Error(ErrorKind::SingularMatrix, "negative power of a numerically singular matrix (min eigenvalue " +
                                               std::to_string(bottom) + ")");
  }
  std::vector<cplx> values(eig.eigenvalues.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double lam = std::max(eig.eigenvalues[k], 0.0);
    values[k] = (lam == 0.0 && p > 0.0) ? 0.0 : std::pow(lam, p);
  }
  return hermitian_part(spectral_apply(eig, values));
}

ComplexMatrix polar_partial_isometry(const ComplexMatrix& y, double tol) {
  if (y.empty()) return y;
  const auto eig = hermitian_eig(hermitian_part(adjoint_times(y, y)), 1.0);
  const auto kept = kept_indices(eig, tol);
  if (kept.empty()) return ComplexMatrix(y.rows(), y.cols());
  std::vector<cplx> values(eig.eigenvalues.size(), 0.0);
  for (std::size_t k : kept) values[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
  return y * spectral_apply(eig, values);
}

ComplexMatrix range_isometry(const ComplexMatrix& m, double tol) {
  if (m.empty()) return ComplexMatrix(m.rows(), 0);
  const auto eig = hermitian_eig(hermitian_part(times_adjoint(m, m)), 1.0);
  return select_columns(eig.eigenvectors, kept_indices(eig, tol));
}

ComplexMatrix range_projection(const ComplexMatrix& m, double tol) {
  const ComplexMatrix w = range_isometry(m, tol);
  if (w.cols() == 0) return ComplexMatrix(m.rows(), m.rows());
  return hermitian_part(times_adjoint(w, w));
}

std::size_t numerical_rank(const ComplexMatrix& m, double tol) {
  if (m.empty()) return 0;
  const ComplexMatrix gram = m.rows() <= m.cols() ? times_adjoint(m, m) : adjoint_times(m, m);
  return kept_indices(hermitian_eig(hermitian_part(gram), 1.0), tol).size();
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.empty()) return {};
  const ComplexMatrix gram = m.rows() <= m.cols() ? times_adjoint(m, m) : adjoint_times(m, m);
  auto eig = hermitian_eig(hermitian_part(gram), 1.0);
  for (double& v : eig.eigenvalues) v = std::sqrt(std::max(v, 0.0));
  return eig.eigenvalues;
}

ComplexMatrix unitary_log(const ComplexMatrix& u, double tol) {
  require_square(u, "unitary_log");
  const std::size_t n = u.rows();
  const double defect = fro_norm(adjoint_times(u, u) - ComplexMatrix::identity(n));
  if (defect > tol) throw Error(ErrorKind::NonUnitary, "‖U*U - I‖ = " + std::to_string(defect));

  // U is normal: C = (U + U*)/2 and S = (U - U*)/2i commute and determine the
  // eigenvalue angle. Diagonalize C, then S inside each cluster of C.
  const ComplexMatrix ua = u.adjoint();
  const ComplexMatrix c = hermitian_part(0.5 * (u + ua));
  const ComplexMatrix s = hermitian_part(cplx(0.0, -0.5) * (u - ua));
  const auto ceig = hermitian_eig(c, 1.0);

  constexpr double kClusterGap = 1e-6;
  ComplexMatrix w(n, n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && ceig.eigenvalues[end] - ceig.eigenvalues[end - 1] <= kClusterGap) ++end;
    std::vector<std::size_t> cols(end - start);
    std::iota(cols.begin(), cols.end(), start);
    const ComplexMatrix basis = select_columns(ceig.eigenvectors, cols);
    const auto seig = hermitian_eig(hermitian_part(adjoint_times(basis, s * basis)), 1.0);
    w.set_block(0, start, basis * seig.eigenvectors);
    start = end;
  }

  constexpr double pi = std::numbers::pi;
  std::vector<cplx> angles(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix col = w.block(0, k, n, 1);
    const double re = adjoint_times(col, c * col)(0, 0).real();
    const double im = adjoint_times(col, s * col)(0, 0).real();
    double phi = std::atan2(im, re);
    // Branch cut at -π, excluded: -1 maps to +π.
    if (phi <= -pi + 1e-12) phi = pi;
    angles[k] = phi;
  }
  ComplexMatrix scaled = w;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= angles[k];
  return hermitian_part(times_adjoint(scaled, w));
}

ComplexMatrix expi_hermitian(const ComplexMatrix& h, double tol) {
  const auto eig = hermitian_eig(h, tol);
  std::vector<cplx> values(eig.eigenvalues.size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = std::polar(1.0, eig.eigenvalues[k]);
  return spectral_apply(eig, values);
}

ComplexMatrix inverse(const ComplexMatrix& m, double tol) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  const double scale = std::max(max_abs(m), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) <= tol * scale) {
      throw Error(ErrorKind::SingularMatrix, "pivot below tolerance in column " + std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    }
    const cplx d = 1.0 / a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) *= d;
      inv(col, k) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a(r, col);
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

ComplexMatrix least_squares(const ComplexMatrix& a_in, const ComplexMatrix& b_in, double tol) {
  if (a_in.rows() != b_in.rows() || a_in.rows() < a_in.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "least_squares needs a tall A with rows matching B");
  }
  ComplexMatrix a = a_in;
  ComplexMatrix b = b_in;
  const std::size_t m = a.rows(), n = a.cols(), nb = b.cols();
  for (std::size_t k = 0; k < n; ++k) {
    double norm_x = 0.0;
    for (std::size_t i = k; i < m; ++i) norm_x += std::norm(a(i, k));
    norm_x = std::sqrt(norm_x);
    if (norm_x == 0.0) continue;
    const cplx x0 = a(k, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * norm_x;
    std::vector<cplx> v(m - k);
    for (std::size_t i = k; i < m; ++i) v[i - k] = a(i, k);
    v[0] -= alpha;
    double vnorm = 0.0;
    for (const cplx& z : v) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (cplx& z : v) z /= vnorm;
    auto reflect = [&](ComplexMatrix& target, std::size_t c0) {
      for (std::size_t j = c0; j < target.cols(); ++j) {
        cplx dot = 0.0;
        for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * target(i, j);
        for (std::size_t i = k; i < m; ++i) target(i, j) -= 2.0 * v[i - k] * dot;
      }
    };
    reflect(a, k);
    reflect(b, 0);
  }
  double rmax = 0.0;
  for (std::size_t k = 0; k < n; ++k) rmax = std::max(rmax, std::abs(a(k, k)));
  ComplexMatrix x(n, nb);
  for (std::size_t kk = n; kk-- > 0;) {
    if (std::abs(a(kk, kk)) <= tol * rmax) {
      throw Error(ErrorKind::SingularMatrix, "rank-deficient least-squares system");
    }
    for (std::size_t j = 0; j < nb; ++j) {
      cplx acc = b(kk, j);
      for (std::size_t l = kk + 1; l < n; ++l) acc -= a(kk, l) * x(l, j);
      x(kk, j) = acc / a(kk, kk);
    }
  }
  return x;
}

bool cholesky_succeeds(const ComplexMatrix& m, double shift) {
  require_square(m, "cholesky_succeeds");
  const std::size_t n = m.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j).real() - shift;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx acc = m(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      l(i, j) = acc / ljj;
    }
  }
  return true;
}

}  // namespace ovf
