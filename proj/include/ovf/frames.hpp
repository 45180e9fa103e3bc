#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ovf/linalg.hpp"

namespace ovf {

/// Finite family {A_j} of operators H -> H_o, each stored as a dim_Ho x dim_H matrix.
struct OVFrame {
  std::size_t dim_H = 0;
  std::size_t dim_Ho = 0;
  std::vector<ComplexMatrix> ops;
  std::vector<std::string> labels;  // empty, or one per operator

  std::size_t count() const noexcept { return ops.size(); }

  /// Throws DimensionMismatch unless every block is dim_Ho x dim_H and labels fit.
  void validate() const;

  /// max_j rank(A_j).
  std::size_t multiplicity(double tol = kDefaultTol) const;
};

enum class FrameKind { NotAFrame, General, Tight, Parseval, Riesz, Orthonormal };

std::string_view to_string(FrameKind kind) noexcept;

struct AnalysisBundle {
  ComplexMatrix theta;  // |J|·dim_Ho x dim_H
  ComplexMatrix S;
  double a = 0.0;  // smallest eigenvalue of S
  double b = 0.0;  // largest eigenvalue of S
  ComplexMatrix P;  // frame projection; range projection of theta when not a frame
  FrameKind kind = FrameKind::NotAFrame;
  std::size_t multiplicity = 0;

  bool is_frame() const noexcept { return kind != FrameKind::NotAFrame; }
  bool is_parseval() const noexcept { return kind == FrameKind::Parseval || kind == FrameKind::Orthonormal; }
};

AnalysisBundle analyze(const OVFrame& f, double tol = kDefaultTol);

/// Same as analyze, but throws NotAFrame when the family is not a frame.
AnalysisBundle analyze_frame(const OVFrame& f, double tol = kDefaultTol);

/// Vertical stack of the operators in index order.
ComplexMatrix analysis_operator(const OVFrame& f);

/// Splits theta into `count` block rows of height dim_Ho.
OVFrame reconstruct(const ComplexMatrix& theta, std::size_t dim_Ho, std::size_t count);

/// {A_j S^{-1/2}}.
OVFrame parsevalize(const OVFrame& f, double tol = kDefaultTol);

struct Dilation {
  std::vector<ComplexMatrix> isometries;  // V_j, |J|·dim_Ho x dim_Ho
  ComplexMatrix T;                        // θ S^{-1/2} θ*
  double residual = 0.0;                  // max_j ‖V_j* T W - A_j‖_F, W = θ S^{-1/2}
};

Dilation dilate(const OVFrame& f, double tol = kDefaultTol);

/// Frame with A_j = block j of an isometry onto range(P), P a projection on
/// C^{count} ⊗ C^{dim_Ho}. Its frame projection is P and it is Parseval.
OVFrame frame_from_projection(const ComplexMatrix& p, std::size_t dim_Ho, double tol = kDefaultTol);

/// Frame with independent standard complex normal entries.
OVFrame random_frame(std::size_t count, std::size_t dim_H, std::size_t dim_Ho, ComplexNormalStream& rng);
OVFrame random_frame(std::size_t count, std::size_t dim_H, std::size_t dim_Ho, std::uint64_t seed);

}  // namespace ovf
