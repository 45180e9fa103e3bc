#pragma once

#include <optional>

#include "ovf/calculus.hpp"

namespace ovf {

struct DualCheck {
  bool dual = false;
  double residual = 0.0;  // max(‖θ_B*θ_A - I‖_F, ‖θ_A*θ_B - I‖_F)
};

DualCheck is_dual(const OVFrame& a, const OVFrame& b, double tol = kDefaultTol);

/// {A_j S_A⁻¹}.
OVFrame canonical_dual(const OVFrame& a, double tol = kDefaultTol);

struct DualFromParameter {
  std::optional<OVFrame> dual;
  double residual = 0.0;  // ‖P_A M P_A - θ_A S_A⁻² θ_A*‖_F
  ParameterCheck parameter;
};

/// Φ_A⁻¹(M) when M parametrizes a dual of A. Throws InvalidParameter when M ≠ M P_A.
DualFromParameter dual_from_parameter(const OVFrame& a, const ComplexMatrix& m, double tol = kDefaultTol);

enum class DisjointKind { NotDisjoint, Disjoint, StronglyDisjoint, StronglyComplementary };

std::string_view to_string(DisjointKind kind) noexcept;

struct DisjointnessVerdict {
  DisjointKind kind = DisjointKind::NotDisjoint;
  Diagnostics residuals;
};

struct DirectSum {
  std::optional<OVFrame> frame;  // {A_j ⊕ B_j} when it is a frame
  DisjointnessVerdict verdict;
};

/// Blocks [A_j | B_j] on H_A ⊕ H_B and the strongest relation that holds.
DirectSum direct_sum(const OVFrame& a, const OVFrame& b, double tol = kDefaultTol);

/// Strong complement {L_j* T} of A, expressed on range(T): the blocks are the
/// block rows of T W_T with W_T an isometry onto range(T). T must be positive
/// with range inside range(P_A⊥); it defaults to P_A⊥, giving a Parseval
/// complement. Throws NoComplement when P_A = I.
OVFrame strong_complement(const OVFrame& a, const std::optional<ComplexMatrix>& t = std::nullopt,
                          double tol = kDefaultTol);

}  // namespace ovf
