#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ovf/calculus.hpp"

namespace ovf {

/// Finite group given by its Cayley table, cayley[g][h] = g·h.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, two-sided identity, associativity
  /// (exhaustive up to order 64, sampled above). Throws InvalidCayleyTable.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::string name = {});

  std::size_t order() const noexcept { return cayley_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return cayley_[g][h]; }
  std::size_t inv(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& cayley() const noexcept { return cayley_; }
  const std::string& name() const noexcept { return name_; }
  bool is_abelian() const;

  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();
  static FiniteGroup quaternion8();
  /// Closure of permutations of {0..n-1} under (g·h)(x) = g(h(x)); the
  /// identity permutation gets index 0, the rest follow in discovery order.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators, std::string name = {});
  /// Built-in group by name: "Z<n>", "S3", "D4", "Q8".
  static FiniteGroup builtin(const std::string& name);

 private:
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::string name_;
};

/// Unitary representation g ↦ π_g on C^dim.
struct GroupRep {
  FiniteGroup group;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> matrices;

  const ComplexMatrix& operator()(std::size_t g) const { return matrices[g]; }

  /// Largest of ‖π_e - I‖, ‖π_g*π_g - I‖, ‖π_gπ_h - π_{gh}‖ (Frobenius).
  double defect() const;
  /// Throws DimensionMismatch, NonUnitary or InvalidParameter.
  void validate(double tol = 1e-9) const;
};

struct RegularReps {
  GroupRep lambda;  // λ_g χ_h = χ_{gh}
  GroupRep rho;     // ρ_g χ_h = χ_{hg⁻¹}
};

RegularReps regular_reps(const FiniteGroup& g);

/// λ_g ⊗ I_mult; basis index g·mult + i.
GroupRep tensor_rep(const FiniteGroup& g, std::size_t mult);

/// Same as tensor_rep with ρ in place of λ.
GroupRep tensor_rho(const FiniteGroup& g, std::size_t mult);

/// Trivial representation on C^dim.
GroupRep trivial_rep(const FiniteGroup& g, std::size_t dim = 1);

struct GeneratorOrbit {
  OVFrame frame;  // A_g = A π_{g⁻¹}, block g at index g
  AnalysisBundle bundle;
  Diagnostics diagnostics;  // intertwining, frame_operator_commutant, projection_commutant
};

/// The frame generated by A. Throws NotAFrame when A is not a generator.
GeneratorOrbit generator_orbit(const ComplexMatrix& a, const GroupRep& rep, double tol = kDefaultTol);

struct SubRep {
  GroupRep rep;     // π_g = W*(λ_g ⊗ I)W
  ComplexMatrix W;  // isometry onto range(P)
  ComplexMatrix A;  // Parseval generator L_e* W
  double projection_residual = 0.0;  // ‖P_A - P‖_F for the generated frame
};

/// Subrepresentation of λ ⊗ I_mult on range(P). Throws NotAProjection, NotInvariant.
SubRep subrep_from_projection(const FiniteGroup& g, std::size_t mult, const ComplexMatrix& p, double tol = kDefaultTol);

struct GroupFrameRep {
  std::optional<GroupRep> rep;
  double residual = 0.0;  // max ‖A_{gp}A*_{gq} - A_p A*_q‖_F
  Diagnostics diagnostics;
};

/// Recovers π with A_g = A_e π_{g⁻¹} from a Parseval frame indexed by G.
/// Throws NotParseval, DimensionMismatch.
GroupFrameRep group_frame_to_rep(const OVFrame& f, const FiniteGroup& g, double tol = kDefaultTol);

struct CheckResult {
  bool ok = false;
  double residual = 0.0;
};

/// max_U ‖(VU - UV)A*‖_F over the unitary system.
CheckResult local_commutant_check(const ComplexMatrix& v, const ComplexMatrix& a, const std::vector<ComplexMatrix>& system,
                                  double tol = kDefaultTol);

/// The mult x mult block of Z at position (e, e).
ComplexMatrix slice_map(const ComplexMatrix& z, const FiniteGroup& g, std::size_t mult);

/// Membership in R(G) ⊗ B(H_o): max_g ‖M(λ_g⊗I) - (λ_g⊗I)M‖_F ≤ tol·‖M‖_F.
CheckResult rg_tensor_membership(const ComplexMatrix& m, const FiniteGroup& g, std::size_t mult, double tol = kDefaultTol);

/// (1/|G|) Σ_g π_g X π_g*, the trace-preserving projection onto π(G)'.
ComplexMatrix commutant_average(const GroupRep& rep, const ComplexMatrix& x);

/// Σ_g ρ_g ⊗ Y_g with complex normal c_g, Y_g: a generic element of R(G) ⊗ B(C^mult).
ComplexMatrix random_algebra_element(const FiniteGroup& g, std::size_t mult, ComplexNormalStream& rng);

struct GeneratorParameterResult {
  std::optional<ComplexMatrix> B;  // L_e* M θ_A
  Diagnostics diagnostics;
};

/// Generator L_e* M θ_A for M in R(G) ⊗ B(H_o) with M = M P_A and M*M
/// invertible on range(P_A); nothing when M is not in the algebra.
/// Throws InvalidParameter when the parameter conditions fail.
GeneratorParameterResult generator_parametrize(const ComplexMatrix& a, const GroupRep& rep, const ComplexMatrix& m,
                                               double tol = kDefaultTol);

struct AlgebraContext {
  FiniteGroup group;
  std::size_t mult = 1;
  std::vector<ComplexMatrix> generators;           // λ_g ⊗ I
  std::vector<ComplexMatrix> central_projections;  // F_k
  std::vector<std::size_t> block_dims;             // d_k, rank(F_k) = d_k²·mult
  std::uint64_t seed_used = 0;
};

/// Minimal central projections of R(G) ⊗ B(C^mult) from the spectral
/// decomposition of a random Hermitian central element. Throws DecompositionFailed.
AlgebraContext central_projections(const FiniteGroup& g, std::size_t mult, std::uint64_t seed = 0,
                                   double tol = kDefaultTol);

struct Equivalence {
  bool equivalent = false;
  std::vector<std::size_t> ranks_p;  // rank(P F_k)
  std::vector<std::size_t> ranks_q;
};

/// Murray–von Neumann equivalence in R(G) ⊗ B(H_o): equal ranks in every central block.
/// Throws NotAProjection, NotInAlgebra.
Equivalence projections_equivalent(const ComplexMatrix& p, const ComplexMatrix& q, const AlgebraContext& ctx,
                                   double tol = kDefaultTol);

/// Partial isometry Z in the algebra with Z*Z = P and ZZ* = Q.
/// Throws NotEquivalent, GenericityFailure.
ComplexMatrix intertwiner(const ComplexMatrix& p, const ComplexMatrix& q, const AlgebraContext& ctx,
                          std::uint64_t seed = 0, double tol = kDefaultTol);

}  // namespace ovf
