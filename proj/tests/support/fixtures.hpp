#pragma once

// Small frames and projections reused across test files.

#include <cmath>
#include <numbers>
#include <vector>

#include "ovf/frames.hpp"

namespace ovf::testing {

inline constexpr std::size_t kFixtureCount = 4;

/// {[1 0], [0 1], [1/√2 1/√2]} on C² with H_o = C.
inline OVFrame fx1() {
  const double h = 1.0 / std::sqrt(2.0);
  return {2, 1, {ComplexMatrix::from_rows({{1.0, 0.0}}), ComplexMatrix::from_rows({{0.0, 1.0}}),
                 ComplexMatrix::from_rows({{h, h}})}, {}};
}

/// Single identity block on C².
inline OVFrame fx2() { return {2, 2, {ComplexMatrix::identity(2)}, {}}; }

inline ComplexMatrix q1() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}); }
inline ComplexMatrix q2() { return ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}}); }
inline ComplexMatrix q3() { return ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}); }

/// Diagonal projection on C^kFixtureCount keeping the listed coordinates.
inline ComplexMatrix coordinate_projection(std::vector<double> diag) { return ComplexMatrix::diagonal(diag); }

/// P = I ⊗ Q₁ (shared by the left-similarity and dual examples).
inline ComplexMatrix uniform_block_projection() { return kron(ComplexMatrix::identity(kFixtureCount), q1()); }

inline ComplexMatrix diagonal_R(double lambda = 2.0) { return q1() + q2() * cplx(lambda); }

/// P = P₁ ⊗ Q₁ + P₂ ⊗ Q₂ with P₁, P₂ complementary coordinate projections.
inline ComplexMatrix mixed_block_projection() {
  return kron(coordinate_projection({1, 1, 0, 0}), q1()) + kron(coordinate_projection({0, 0, 1, 1}), q2());
}

/// Expected P_B = P₁ ⊗ Q₁ + P₂ ⊗ Q₃.
inline ComplexMatrix mixed_block_expected_PB() {
  return kron(coordinate_projection({1, 1, 0, 0}), q1()) + kron(coordinate_projection({0, 0, 1, 1}), q3());
}

inline ComplexMatrix shear_R() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({{1.0, h}, {0.0, h}});
}

inline ComplexMatrix lower_triangular_R(double lambda) { return ComplexMatrix::from_rows({{1.0, 0.0}, {lambda, 1.0}}); }

/// Parseval frame of three vectors at 120° in R^2, the orbit of a rotation by Z_3.
inline OVFrame mercedes() {
  OVFrame f{2, 1, {}, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    const double t = 2.0 * std::numbers::pi * double(k) / 3.0;
    f.ops.push_back(ComplexMatrix::from_rows({{std::sqrt(2.0 / 3.0) * std::cos(t), std::sqrt(2.0 / 3.0) * std::sin(t)}}));
  }
  return f;
}

}  // namespace ovf::testing
