#include <algorithm>
#include <cmath>
#include <string>

#include "ovf/frames.hpp"

namespace ovf {

void OVFrame::validate() const {
  if (dim_H == 0 || dim_Ho == 0) throw Error(ErrorKind::DimensionMismatch, "frame dimensions must be positive");
  if (ops.empty()) throw Error(ErrorKind::DimensionMismatch, "frame has no operators");
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (ops[j].rows() != dim_Ho || ops[j].cols() != dim_H) {
      throw Error(ErrorKind::DimensionMismatch, "block " + std::to_string(j) + " is " + std::to_string(ops[j].rows()) +
                                                    "x" + std::to_string(ops[j].cols()) + ", expected " +
                                                    std::to_string(dim_Ho) + "x" + std::to_string(dim_H));
    }
  }
  if (!labels.empty() && labels.size() != ops.size()) {
    throw Error(ErrorKind::DimensionMismatch, "label count does not match operator count");
  }
}

std::size_t OVFrame::multiplicity(double tol) const {
  std::size_t m = 0;
  for (const auto& a : ops) m = std::max(m, numerical_rank(a, tol));
  return m;
}

std::string_view to_string(FrameKind kind) noexcept {
  switch (kind) {
    case FrameKind::NotAFrame: return "NotAFrame";
    case FrameKind::General: return "General";
    case FrameKind::Tight: return "Tight";
    case FrameKind::Parseval: return "Parseval";
    case FrameKind::Riesz: return "Riesz";
    case FrameKind::Orthonormal: return "Orthonormal";
  }
  return "Unknown";
}

ComplexMatrix analysis_operator(const OVFrame& f) {
  f.validate();
  ComplexMatrix theta(f.count() * f.dim_Ho, f.dim_H);
  for (std::size_t j = 0; j < f.count(); ++j) theta.set_block(j * f.dim_Ho, 0, f.ops[j]);
  return theta;
}

AnalysisBundle analyze(const OVFrame& f, double tol) {
  AnalysisBundle out;
  out.theta = analysis_operator(f);
  out.S = hermitian_part(adjoint_times(out.theta, out.theta));
  out.multiplicity = f.multiplicity(tol);
  const auto eig = hermitian_eig(out.S, tol);
  out.a = eig.eigenvalues.front();
  out.b = eig.eigenvalues.back();
  if (out.b <= 0.0 || out.a <= tol * out.b) {
    out.kind = FrameKind::NotAFrame;
    out.P = range_projection(out.theta, tol);
    return out;
  }
  std::vector<cplx> inv(eig.eigenvalues.size());
  std::transform(eig.eigenvalues.begin(), eig.eigenvalues.end(), inv.begin(), [](double v) { return cplx(1.0 / v); });
  out.P = hermitian_part(out.theta * spectral_apply(eig, inv) * out.theta.adjoint());

  const std::size_t n = out.S.rows();
  const bool parseval = fro_norm(out.S - ComplexMatrix::identity(n)) <= tol;
  const bool riesz = fro_norm(out.P - ComplexMatrix::identity(out.P.rows())) <= tol;
  if (parseval && riesz) {
    out.kind = FrameKind::Orthonormal;
  } else if (parseval) {
    out.kind = FrameKind::Parseval;
  } else if (riesz) {
    out.kind = FrameKind::Riesz;
  } else if (out.b - out.a <= tol * out.b) {
    out.kind = FrameKind::Tight;
  } else {
    out.kind = FrameKind::General;
  }
  return out;
}

AnalysisBundle analyze_frame(const OVFrame& f, double tol) {
  AnalysisBundle out = analyze(f, tol);
  if (!out.is_frame()) {
    throw Error(ErrorKind::NotAFrame, "smallest frame-operator eigenvalue " + std::to_string(out.a) +
                                          " is not above tol·b");
  }
  return out;
}

OVFrame reconstruct(const ComplexMatrix& theta, std::size_t dim_Ho, std::size_t count) {
  if (dim_Ho == 0 || count == 0 || theta.rows() != count * dim_Ho) {
    throw Error(ErrorKind::DimensionMismatch, "analysis operator has " + std::to_string(theta.rows()) +
                                                  " rows, expected " + std::to_string(count) + "·" +
                                                  std::to_string(dim_Ho));
  }
  OVFrame f;
  f.dim_H = theta.cols();
  f.dim_Ho = dim_Ho;
  f.ops.reserve(count);
  for (std::size_t j = 0; j < count; ++j) f.ops.push_back(theta.block(j * dim_Ho, 0, dim_Ho, theta.cols()));
  return f;
}

OVFrame parsevalize(const OVFrame& f, double tol) {
  const AnalysisBundle bundle = analyze_frame(f, tol);
  const ComplexMatrix s_inv_half = psd_power(bundle.S, -0.5, tol);
  OVFrame out = f;
  for (auto& a : out.ops) a = a * s_inv_half;
  return out;
}

Dilation dilate(const OVFrame& f, double tol) {
  const AnalysisBundle bundle = analyze_frame(f, tol);
  const std::size_t k = bundle.theta.rows();
  Dilation d;
  d.isometries.reserve(f.count());
  for (std::size_t j = 0; j < f.count(); ++j) {
    ComplexMatrix v(k, f.dim_Ho);
    for (std::size_t i = 0; i < f.dim_Ho; ++i) v(j * f.dim_Ho + i, i) = 1.0;
    d.isometries.push_back(std::move(v));
  }
  const ComplexMatrix w = bundle.is_parseval() ? bundle.theta : bundle.theta * psd_power(bundle.S, -0.5, tol);
  d.T = bundle.is_parseval() ? bundle.P : hermitian_part(times_adjoint(w, bundle.theta));
  const ComplexMatrix tw = d.T * w;
  for (std::size_t j = 0; j < f.count(); ++j) {
    d.residual = std::max(d.residual, fro_norm(tw.block(j * f.dim_Ho, 0, f.dim_Ho, f.dim_H) - f.ops[j]));
  }
  return d;
}

OVFrame frame_from_projection(const ComplexMatrix& p, std::size_t dim_Ho, double tol) {
  if (!p.is_square() || dim_Ho == 0 || p.rows() % dim_Ho != 0) {
    throw Error(ErrorKind::DimensionMismatch, "projection size is not a multiple of dim_Ho");
  }
  if (fro_norm(p * p - p) > tol * std::max(1.0, fro_norm(p)) || hermitian_defect(p) > tol) {
    throw Error(ErrorKind::NotAProjection, "matrix is not an orthogonal projection");
  }
  const ComplexMatrix w = range_isometry(p, tol);
  if (w.cols() == 0) throw Error(ErrorKind::NotAFrame, "projection is zero");
  return reconstruct(w, dim_Ho, p.rows() / dim_Ho);
}

OVFrame random_frame(std::size_t count, std::size_t dim_H, std::size_t dim_Ho, ComplexNormalStream& rng) {
  OVFrame f;
  f.dim_H = dim_H;
  f.dim_Ho = dim_Ho;
  f.ops.reserve(count);
  for (std::size_t j = 0; j < count; ++j) f.ops.push_back(random_matrix(dim_Ho, dim_H, rng));
  return f;
}

OVFrame random_frame(std::size_t count, std::size_t dim_H, std::size_t dim_Ho, std::uint64_t seed) {
  ComplexNormalStream rng(seed);
  return random_frame(count, dim_H, dim_Ho, rng);
}

}  // namespace ovf
