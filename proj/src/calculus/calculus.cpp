#include <algorithm>
#include <cmath>
#include <string>

#include "ovf/calculus.hpp"

namespace ovf {

namespace {

void require_same_shape(const OVFrame& a, const OVFrame& b) {
  a.validate();
  b.validate();
  if (a.count() != b.count() || a.dim_Ho != b.dim_Ho || a.dim_H != b.dim_H) {
    throw Error(ErrorKind::DimensionMismatch, "frames differ in index count or dimensions");
  }
}

// Isometry θ S^{-1/2} onto range(P_A).
ComplexMatrix range_frame(const AnalysisBundle& bundle, double tol) {
  return bundle.theta * psd_power(bundle.S, -0.5, tol);
}

ComplexMatrix s_inverse(const AnalysisBundle& bundle, double tol) { return psd_power(bundle.S, -1.0, tol); }

void require_invertible_r(const ComplexMatrix& r, std::size_t dim_Ho, double tol) {
  if (!r.is_square() || r.rows() != dim_Ho) {
    throw Error(ErrorKind::DimensionMismatch, "R must be " + std::to_string(dim_Ho) + "x" + std::to_string(dim_Ho));
  }
  const auto sv = singular_values(r);
  if (sv.back() == 0.0 || sv.front() * sv.front() <= tol * sv.back() * sv.back()) {
    throw Error(ErrorKind::SingularR, "R is not invertible at the requested tolerance");
  }
}

}  // namespace

ComplexMatrix lift(const ComplexMatrix& m, std::size_t n) { return kron(ComplexMatrix::identity(n), m); }

ParameterCheck check_parameter(const AnalysisBundle& base, const ComplexMatrix& m, double tol) {
  if (!base.is_frame()) throw Error(ErrorKind::NotAFrame, "base of a parameter must be a frame");
  if (!m.is_square() || m.rows() != base.P.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "parameter must be square of size " + std::to_string(base.P.rows()));
  }
  ParameterCheck c;
  c.right_residual = fro_norm(m - m * base.P);
  const ComplexMatrix w = range_frame(base, tol);
  const ComplexMatrix mw = m * w;
  const auto eig = hermitian_eig(hermitian_part(adjoint_times(mw, mw)), tol);
  c.min_eigenvalue = eig.eigenvalues.front();
  c.max_eigenvalue = eig.eigenvalues.back();
  c.valid = c.right_residual <= tol * std::max(1.0, fro_norm(m)) && c.max_eigenvalue > 0.0 &&
            c.min_eigenvalue > tol * c.max_eigenvalue;
  return c;
}

FrameParameter phi(const OVFrame& a, const OVFrame& b, double tol) {
  require_same_shape(a, b);
  FrameParameter p;
  p.base_frame = a;
  p.base = analyze_frame(a, tol);
  analyze_frame(b, tol);
  p.M = analysis_operator(b) * s_inverse(p.base, tol) * p.base.theta.adjoint();
  return p;
}

OVFrame phi_inverse(const FrameParameter& p, double tol) {
  const ParameterCheck c = check_parameter(p.base, p.M, tol);
  if (!c.valid) {
    throw Error(ErrorKind::InvalidParameter, "‖M - M P_A‖ = " + std::to_string(c.right_residual) +
                                                 ", smallest eigenvalue on range(P_A) = " +
                                                 std::to_string(c.min_eigenvalue));
  }
  OVFrame out = reconstruct(p.M * p.base.theta, p.base_frame.dim_Ho, p.base_frame.count());
  out.labels = p.base_frame.labels;
  return out;
}

OVFrame phi_inverse(const OVFrame& a, const ComplexMatrix& m, double tol) {
  return phi_inverse(FrameParameter{m, a, analyze_frame(a, tol)}, tol);
}

SimilarityReport right_similarity(const OVFrame& a, const OVFrame& b, double tol) {
  require_same_shape(a, b);
  const AnalysisBundle ba = analyze_frame(a, tol);
  const AnalysisBundle bb = analyze_frame(b, tol);
  SimilarityReport report;
  const double distance = fro_norm(bb.P - ba.P);
  report.diagnostics["projection_distance"] = distance;
  if (distance > tol) return report;

  const ComplexMatrix t = s_inverse(ba, tol) * adjoint_times(ba.theta, bb.theta);
  double worst = 0.0;
  for (std::size_t j = 0; j < a.count(); ++j) {
    const double scale = std::max(fro_norm(b.ops[j]), 1e-300);
    worst = std::max(worst, fro_norm(b.ops[j] - a.ops[j] * t) / scale);
  }
  report.diagnostics["reconstruction"] = worst;
  report.diagnostics["least_squares_agreement"] = fro_norm(t - least_squares(ba.theta, bb.theta, tol)) / fro_norm(t);
  if (ba.is_parseval() && bb.is_parseval()) {
    report.diagnostics["unitarity"] = fro_norm(adjoint_times(t, t) - ComplexMatrix::identity(t.rows()));
  }
  report.right = t;
  return report;
}

LeftProduct left_multiply(const OVFrame& a, const ComplexMatrix& r, double tol) {
  a.validate();
  require_invertible_r(r, a.dim_Ho, tol);
  const AnalysisBundle ba = analyze_frame(a, tol);
  LeftProduct out;
  out.frame = a;
  for (auto& op : out.frame.ops) op = r * op;
  out.bundle = analyze_frame(out.frame, tol);

  const ComplexMatrix lifted = lift(r, a.count());
  const auto sv = singular_values(r);
  const double r_norm = sv.back();
  const double r_inv_norm = 1.0 / sv.front();
  out.diagnostics["theta_identity"] = fro_norm(out.bundle.theta - lifted * ba.theta);
  out.diagnostics["frame_operator_identity"] =
      fro_norm(out.bundle.S - ba.theta.adjoint() * lift(adjoint_times(r, r), a.count()) * ba.theta) /
      fro_norm(out.bundle.S);
  out.diagnostics["lower_bound_slack"] = out.bundle.a - ba.a / (r_inv_norm * r_inv_norm);
  out.diagnostics["upper_bound_slack"] = ba.b * r_norm * r_norm - out.bundle.b;
  const double rank_a = std::round(trace(ba.P).real());
  const double rank_b = std::round(trace(out.bundle.P).real());
  out.diagnostics["rank_difference"] = std::abs(rank_a - rank_b);
  return out;
}

SimilarityReport left_right_compatible(const OVFrame& a, const ComplexMatrix& r, double tol) {
  a.validate();
  require_invertible_r(r, a.dim_Ho, tol);
  const AnalysisBundle ba = analyze_frame(a, tol);
  const std::size_t n = a.count();
  const std::size_t k = ba.P.rows();
  const ComplexMatrix r_inv = inverse(r, tol);
  const ComplexMatrix lifted = lift(r, n);
  const ComplexMatrix lifted_inv = lift(r_inv, n);
  const ComplexMatrix& p = ba.P;
  const ComplexMatrix p_perp = ComplexMatrix::identity(k) - p;
  const ComplexMatrix s_inv = s_inverse(ba, tol);
  const double theta_norm = fro_norm(ba.theta);

  SimilarityReport report;
  auto& d = report.diagnostics;
  std::vector<bool> verdicts;

  // (i) right similarity of {R A_j} and {A_j}
  const ComplexMatrix theta_b = lifted * ba.theta;
  const ComplexMatrix p_b = hermitian_part(theta_b * psd_power(hermitian_part(adjoint_times(theta_b, theta_b)), -1.0, tol) *
                                           theta_b.adjoint());
  d["i_projection_distance"] = fro_norm(p_b - p);
  verdicts.push_back(d["i_projection_distance"] <= tol);

  // (ii) (I⊗R)P_A = P_A(I⊗R)P_A and the compression is invertible on range(P_A)
  const ComplexMatrix w = range_frame(ba, tol);
  const auto sv = singular_values(w.adjoint() * lifted * w);
  d["ii_corner"] = fro_norm(p_perp * lifted * p);
  d["ii_min_singular"] = sv.front();
  verdicts.push_back(d["ii_corner"] <= tol && sv.front() > tol * op_norm(r));

  // (iii) both corners vanish
  d["iii_R"] = d["ii_corner"];
  d["iii_Rinv"] = fro_norm(p_perp * lifted_inv * p);
  const bool corners = d["iii_R"] <= tol && d["iii_Rinv"] <= tol;
  verdicts.push_back(corners);

  // (iv) R A_i = A_i S⁻¹ Σ A_j* R A_j, and the same for R⁻¹
  auto block_identity = [&](const ComplexMatrix& rr, const ComplexMatrix& lifted_rr) {
    const ComplexMatrix x = s_inv * adjoint_times(ba.theta, lifted_rr * ba.theta);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::pow(fro_norm(rr * a.ops[i] - a.ops[i] * x), 2);
    return std::sqrt(sum) / theta_norm;
  };
  d["iv_R"] = block_identity(r, lifted);
  d["iv_Rinv"] = block_identity(r_inv, lifted_inv);
  verdicts.push_back(d["iv_R"] <= tol && d["iv_Rinv"] <= tol);

  // (v) first identity of (iv) together with (Σ A_j* R A_j)⁻¹ = S⁻¹(Σ A_j* R⁻¹ A_j)S⁻¹
  const ComplexMatrix x_r = adjoint_times(ba.theta, lifted * ba.theta);
  const ComplexMatrix y_r = s_inv * adjoint_times(ba.theta, lifted_inv * ba.theta) * s_inv;
  d["v_inverse"] = fro_norm(y_r * x_r - ComplexMatrix::identity(a.dim_H));
  verdicts.push_back(d["iv_R"] <= tol && d["v_inverse"] <= tol);

  if (fro_norm(adjoint_times(r, r) - ComplexMatrix::identity(a.dim_Ho)) <= tol) {
    d["vi_commutator"] = fro_norm(lifted * p - p * lifted);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const ComplexMatrix x = a.ops[j] * s_inv * a.ops[i].adjoint();
        sum += std::pow(fro_norm(r * x - x * r), 2);
      }
    d["vii_commutator"] = std::sqrt(sum);
    verdicts.push_back(d["vi_commutator"] <= tol);
    verdicts.push_back(d["vii_commutator"] <= tol);
  }

  report.left_right_ok = corners;
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == corners; });
  d["conditions_agree"] = agree ? 1.0 : 0.0;
  if (corners) report.right = s_inv * adjoint_times(ba.theta, theta_b);
  return report;
}

OVFrame compose(const OVFrame& a, const OVFrame& b) {
  a.validate();
  b.validate();
  if (b.dim_H != a.dim_Ho) {
    throw Error(ErrorKind::DimensionMismatch, "inner frame acts on dimension " + std::to_string(b.dim_H) +
                                                  ", outer frame lands in " + std::to_string(a.dim_Ho));
  }
  OVFrame c;
  c.dim_H = a.dim_H;
  c.dim_Ho = b.dim_Ho;
  c.ops.reserve(a.count() * b.count());
  const bool labelled = !a.labels.empty() && !b.labels.empty();
  for (std::size_t j = 0; j < a.count(); ++j)
    for (std::size_t m = 0; m < b.count(); ++m) {
      c.ops.push_back(b.ops[m] * a.ops[j]);
      if (labelled) c.labels.push_back("(" + b.labels[m] + "," + a.labels[j] + ")");
    }
  return c;
}

Diagnostics compose_identities(const OVFrame& a, const OVFrame& b, const OVFrame& c) {
  const ComplexMatrix theta_a = analysis_operator(a);
  const ComplexMatrix theta_b = analysis_operator(b);
  const ComplexMatrix theta_c = analysis_operator(c);
  const ComplexMatrix s_b = adjoint_times(theta_b, theta_b);
  const ComplexMatrix s_c = adjoint_times(theta_c, theta_c);
  Diagnostics d;
  d["theta_identity"] = fro_norm(theta_c - lift(theta_b, a.count()) * theta_a);
  d["frame_operator_identity"] = fro_norm(s_c - theta_a.adjoint() * lift(s_b, a.count()) * theta_a) / fro_norm(s_c);
  return d;
}

OVFrame decompose_multiframe(const OVFrame& a, const OVFrame& basis_rows) {
  basis_rows.validate();
  if (basis_rows.dim_Ho != 1 || basis_rows.dim_H != a.dim_Ho) {
    throw Error(ErrorKind::DimensionMismatch, "basis rows must be functionals on C^" + std::to_string(a.dim_Ho));
  }
  return compose(a, basis_rows);
}

}  // namespace ovf
