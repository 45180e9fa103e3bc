#pragma once

#include <map>
#include <optional>
#include <string>

#include "ovf/frames.hpp"

namespace ovf {

using Diagnostics = std::map<std::string, double>;

/// An element M of the parameter set of a base frame A.
struct FrameParameter {
  ComplexMatrix M;
  OVFrame base_frame;
  AnalysisBundle base;
};

struct ParameterCheck {
  double right_residual = 0.0;  // ‖M - M P_A‖_F
  double min_eigenvalue = 0.0;  // smallest eigenvalue of P_A M*M P_A on range(P_A)
  double max_eigenvalue = 0.0;
  bool valid = false;
};

/// Checks M = M P_A and invertibility of P_A M*M P_A on range(P_A)
/// (smallest eigenvalue above tol times the largest).
ParameterCheck check_parameter(const AnalysisBundle& base, const ComplexMatrix& m, double tol = kDefaultTol);

/// Φ_A(B) = θ_B S_A⁻¹ θ_A*.
FrameParameter phi(const OVFrame& a, const OVFrame& b, double tol = kDefaultTol);

/// Φ_A⁻¹(M): block rows of M θ_A. Throws InvalidParameter when M is not admissible.
OVFrame phi_inverse(const FrameParameter& p, double tol = kDefaultTol);
OVFrame phi_inverse(const OVFrame& a, const ComplexMatrix& m, double tol = kDefaultTol);

struct SimilarityReport {
  std::optional<ComplexMatrix> right;
  bool left_right_ok = false;
  Diagnostics diagnostics;
};

/// B = A T for invertible T exactly when P_A = P_B; then T = S_A⁻¹ θ_A* θ_B.
SimilarityReport right_similarity(const OVFrame& a, const OVFrame& b, double tol = kDefaultTol);

struct LeftProduct {
  OVFrame frame;  // {R A_j}
  AnalysisBundle bundle;
  Diagnostics diagnostics;
};

/// {R A_j} with the identities relating its analysis data to that of A.
LeftProduct left_multiply(const OVFrame& a, const ComplexMatrix& r, double tol = kDefaultTol);

/// Evaluates the equivalent conditions for {R A_j} to be right-similar to {A_j}.
/// left_right_ok follows the corner conditions P_A⊥(I⊗R^{±1})P_A = 0; the
/// diagnostic "conditions_agree" is 1 when every evaluated condition gives
/// the same verdict.
SimilarityReport left_right_compatible(const OVFrame& a, const ComplexMatrix& r, double tol = kDefaultTol);

/// C_{(m,j)} = B_m A_j stored at index j·|M| + m.
OVFrame compose(const OVFrame& a, const OVFrame& b);

/// Residuals of θ_C = (I⊗θ_B)θ_A and S_C = θ_A*(I⊗S_B)θ_A.
Diagnostics compose_identities(const OVFrame& a, const OVFrame& b, const OVFrame& c);

/// Vector frame {B_m A_j} obtained from a frame {B_m} of functionals on H_o.
OVFrame decompose_multiframe(const OVFrame& a, const OVFrame& basis_rows);

/// I_n ⊗ m.
ComplexMatrix lift(const ComplexMatrix& m, std::size_t n);

}  // namespace ovf
