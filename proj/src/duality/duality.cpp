#include <algorithm>
#include <cmath>
#include <string>

#include "ovf/duality.hpp"

namespace ovf {

namespace {

void require_same_index(const OVFrame& a, const OVFrame& b) {
  a.validate();
  b.validate();
  if (a.count() != b.count() || a.dim_Ho != b.dim_Ho) {
    throw Error(ErrorKind::DimensionMismatch, "frames differ in index count or range dimension");
  }
}

}  // namespace

std::string_view to_string(DisjointKind kind) noexcept {
  switch (kind) {
    case DisjointKind::NotDisjoint: return "NotDisjoint";
    case DisjointKind::Disjoint: return "Disjoint";
    case DisjointKind::StronglyDisjoint: return "StronglyDisjoint";
    case DisjointKind::StronglyComplementary: return "StronglyComplementary";
  }
  return "Unknown";
}

DualCheck is_dual(const OVFrame& a, const OVFrame& b, double tol) {
  require_same_index(a, b);
  if (a.dim_H != b.dim_H) throw Error(ErrorKind::DimensionMismatch, "frames act on spaces of different dimension");
  const ComplexMatrix theta_a = analysis_operator(a);
  const ComplexMatrix theta_b = analysis_operator(b);
  const ComplexMatrix id = ComplexMatrix::identity(a.dim_H);
  DualCheck c;
  c.residual = std::max(fro_norm(adjoint_times(theta_b, theta_a) - id), fro_norm(adjoint_times(theta_a, theta_b) - id));
  c.dual = c.residual <= tol;
  return c;
}

OVFrame canonical_dual(const OVFrame& a, double tol) {
  const AnalysisBundle bundle = analyze_frame(a, tol);
  const ComplexMatrix s_inv = psd_power(bundle.S, -1.0, tol);
  OVFrame out = a;
  for (auto& op : out.ops) op = op * s_inv;
  return out;
}

DualFromParameter dual_from_parameter(const OVFrame& a, const ComplexMatrix& m, double tol) {
  const AnalysisBundle bundle = analyze_frame(a, tol);
  DualFromParameter out;
  out.parameter = check_parameter(bundle, m, tol);
  if (out.parameter.right_residual > tol * std::max(1.0, fro_norm(m))) {
    throw Error(ErrorKind::InvalidParameter, "M differs from M P_A by " + std::to_string(out.parameter.right_residual));
  }
  const ComplexMatrix target = bundle.theta * psd_power(bundle.S, -2.0, tol) * bundle.theta.adjoint();
  out.residual = fro_norm(bundle.P * m * bundle.P - target);
  if (out.residual <= tol && out.parameter.valid) {
    OVFrame dual = reconstruct(m * bundle.theta, a.dim_Ho, a.count());
    dual.labels = a.labels;
    out.dual = std::move(dual);
  }
  return out;
}

DirectSum direct_sum(const OVFrame& a, const OVFrame& b, double tol) {
  require_same_index(a, b);
  const AnalysisBundle ba = analyze_frame(a, tol);
  const AnalysisBundle bb = analyze_frame(b, tol);

  OVFrame sum;
  sum.dim_H = a.dim_H + b.dim_H;
  sum.dim_Ho = a.dim_Ho;
  sum.labels = a.labels;
  for (std::size_t j = 0; j < a.count(); ++j) {
    ComplexMatrix block(a.dim_Ho, sum.dim_H);
    block.set_block(0, 0, a.ops[j]);
    block.set_block(0, a.dim_H, b.ops[j]);
    sum.ops.push_back(std::move(block));
  }
  const AnalysisBundle bs = analyze(sum, tol);

  DirectSum out;
  auto& r = out.verdict.residuals;
  const std::size_t k = ba.P.rows();
  r["complement"] = fro_norm(ba.P + bb.P - ComplexMatrix::identity(k));
  r["cross_gram"] = fro_norm(adjoint_times(ba.theta, bb.theta)) / (fro_norm(ba.theta) * fro_norm(bb.theta));
  r["projection_product"] = fro_norm(ba.P * bb.P);
  r["sum_lower_bound"] = bs.b > 0.0 ? bs.a / bs.b : 0.0;
  if (ba.is_parseval() && bb.is_parseval()) {
    r["sum_parseval"] = fro_norm(bs.S - ComplexMatrix::identity(sum.dim_H));
  }

  if (r["complement"] <= tol) {
    out.verdict.kind = DisjointKind::StronglyComplementary;
  } else if (r["cross_gram"] <= tol) {
    out.verdict.kind = DisjointKind::StronglyDisjoint;
  } else if (bs.is_frame()) {
    out.verdict.kind = DisjointKind::Disjoint;
  } else {
    out.verdict.kind = DisjointKind::NotDisjoint;
  }
  if (bs.is_frame()) out.frame = std::move(sum);
  return out;
}

OVFrame strong_complement(const OVFrame& a, const std::optional<ComplexMatrix>& t, double tol) {
  const AnalysisBundle bundle = analyze_frame(a, tol);
  const std::size_t k = bundle.P.rows();
  const ComplexMatrix p_perp = ComplexMatrix::identity(k) - bundle.P;
  if (std::round(trace(p_perp).real()) < 1.0) {
    throw Error(ErrorKind::NoComplement, "frame projection is the identity");
  }
  ComplexMatrix tt = t.value_or(p_perp);
  if (!tt.is_square() || tt.rows() != k) {
    throw Error(ErrorKind::DimensionMismatch, "T must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  const double scale = std::max(1.0, fro_norm(tt));
  if (hermitian_defect(tt) > tol * scale) throw Error(ErrorKind::InvalidParameter, "T is not Hermitian");
  tt = hermitian_part(tt);
  const auto eig = hermitian_eig(tt, tol);
  if (eig.eigenvalues.front() < -tol * scale) throw Error(ErrorKind::InvalidParameter, "T is not positive");
  if (fro_norm(bundle.P * tt) > tol * scale) {
    throw Error(ErrorKind::InvalidParameter, "range of T is not inside the complement of the frame projection");
  }
  const ComplexMatrix w = range_isometry(tt, tol);
  if (w.cols() == 0) throw Error(ErrorKind::InvalidParameter, "T is zero");
  OVFrame out = reconstruct(tt * w, a.dim_Ho, a.count());
  out.labels = a.labels;
  return out;
}

}  // namespace ovf
