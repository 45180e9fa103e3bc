#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ovf/groups.hpp"

namespace ovf {

struct PathSample {
  double t = 0.0;
  ComplexMatrix generator;
};

struct FramePath {
  std::vector<PathSample> samples;
  ComplexMatrix start;  // endpoint generators the path was asked to join
  ComplexMatrix end;
  bool parseval = false;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;
  double max_step = 0.0;   // max ‖B(t_{i+1}) - B(t_i)‖ in operator norm
  double h_norm = 0.0;     // ‖H‖ of the unitary logarithm on the Parseval leg
  double lipschitz = 0.0;  // L with ‖B(t) - B(s)‖ ≤ L|t - s|
};

/// t ↦ L_e* exp(itH) P_A θ_A for the unitary U = V_B + Z of the algebra.
class ParsevalGeodesic {
 public:
  /// Throws NotParseval, NotSameRep, AlgebraFailure.
  ParsevalGeodesic(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep, std::uint64_t seed = 0,
                   double tol = kDefaultTol);

  ComplexMatrix generator(double t) const;
  /// V(t) = exp(itH) P_A.
  ComplexMatrix isometry(double t) const;

  const ComplexMatrix& H() const noexcept { return h_; }
  const ComplexMatrix& U() const noexcept { return u_; }
  const ComplexMatrix& projection() const noexcept { return p_a_; }
  double h_norm() const noexcept { return h_norm_; }

 private:
  ComplexMatrix h_, u_, p_a_;
  ComplexMatrix x_;       // eigenvectors of H
  ComplexMatrix x_e_;     // rows of x_ at the identity block
  ComplexMatrix y_;       // x_* θ_A
  std::vector<double> phases_;
  double h_norm_ = 0.0;
};

/// Path of Parseval generators from A to B sampled at t = i/n_samples.
FramePath connect_parseval(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep,
                           std::size_t n_samples = 256, std::uint64_t seed = 0, double tol = kDefaultTol);

/// Path of generators: A S_A^{-3t/2} on [0, 1/3], the Parseval geodesic on
/// [1/3, 2/3], B S_B^{-3(1-t)/2} on [2/3, 1].
FramePath connect_general(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep,
                          std::size_t n_samples = 256, std::uint64_t seed = 0, double tol = kDefaultTol);

struct PathReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::optional<std::size_t> first_bad_sample;
  double start_residual = 0.0;
  double end_residual = 0.0;
  double max_sample_residual = 0.0;  // ‖S - I‖_F (Parseval) or a/b deficit
  double max_step = 0.0;
  double step_budget = 0.0;  // L · max(t_{i+1} - t_i)
};

/// Re-checks every sample, the endpoints, monotone t and the Lipschitz budget.
PathReport verify_path(const FramePath& path, const GroupRep& rep, double tol = kDefaultTol);

}  // namespace ovf
