#include <algorithm>
#include <cmath>
#include <string>

#include "ovf/groups.hpp"

namespace ovf {

namespace {

bool is_central(const ComplexMatrix& f, const RegularReps& reps, double tol) {
  for (std::size_t g = 0; g < reps.lambda.matrices.size(); ++g) {
    if (fro_norm(f * reps.lambda(g) - reps.lambda(g) * f) > tol) return false;
    if (fro_norm(f * reps.rho(g) - reps.rho(g) * f) > tol) return false;
  }
  return true;
}

// Central projections of R(G) for one random central element, or nothing
// when the eigenvalue clusters do not pass the consistency checks.
std::optional<std::vector<ComplexMatrix>> try_decomposition(const FiniteGroup& g, const RegularReps& reps,
                                                            ComplexNormalStream& rng, double tol) {
  const std::size_t n = g.order();
  const auto classes = g.conjugacy_classes();
  ComplexMatrix z(n, n);
  for (const auto& cls : classes) {
    ComplexMatrix c(n, n);
    for (std::size_t x : cls) c += reps.lambda(x);
    const ComplexMatrix re = (c + c.adjoint()) * cplx(0.5);
    const ComplexMatrix im = (c - c.adjoint()) * cplx(0.0, -0.5);
    z += re * cplx(rng.normal()) + im * cplx(rng.normal());
  }
  const auto eig = hermitian_eig(hermitian_part(z), tol);
  const double scale = std::max({1.0, std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back())});
  const double gap = std::sqrt(tol) * scale;

  std::vector<ComplexMatrix> blocks;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k < n && eig.eigenvalues[k] - eig.eigenvalues[k - 1] <= gap) continue;
    const ComplexMatrix v = eig.eigenvectors.block(0, start, n, k - start);
    blocks.push_back(hermitian_part(times_adjoint(v, v)));
    start = k;
  }
  if (blocks.size() != classes.size()) return std::nullopt;
  std::size_t total = 0;
  for (const auto& f : blocks) {
    const auto rank = static_cast<std::size_t>(std::lround(trace(f).real()));
    const auto d = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(rank))));
    if (d * d != rank || !is_central(f, reps, 1e-9)) return std::nullopt;
    total += rank;
  }
  if (total != n) return std::nullopt;
  return blocks;
}

void require_projection(const ComplexMatrix& p, std::size_t n, const char* what, double tol) {
  if (!p.is_square() || p.rows() != n) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  }
  if (hermitian_defect(p) > tol || fro_norm(p * p - p) > tol * std::max(1.0, fro_norm(p))) {
    throw Error(ErrorKind::NotAProjection, std::string(what) + " is not an orthogonal projection");
  }
}

}  // namespace

AlgebraContext central_projections(const FiniteGroup& g, std::size_t mult, std::uint64_t seed, double tol) {
  if (mult == 0) throw Error(ErrorKind::DimensionMismatch, "multiplicity must be positive");
  const RegularReps reps = regular_reps(g);
  constexpr int kAttempts = 10;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    ComplexNormalStream rng(seed + static_cast<std::uint64_t>(attempt));
    auto blocks = try_decomposition(g, reps, rng, tol);
    if (!blocks) continue;
    AlgebraContext ctx{g, mult, tensor_rep(g, mult).matrices, {}, {}, seed + static_cast<std::uint64_t>(attempt)};
    for (const auto& f : *blocks) {
      const double rank = std::round(trace(f).real());
      ctx.block_dims.push_back(static_cast<std::size_t>(std::lround(std::sqrt(rank))));
      ctx.central_projections.push_back(mult == 1 ? f : kron(f, ComplexMatrix::identity(mult)));
    }
    return ctx;
  }
  throw Error(ErrorKind::DecompositionFailed, "no consistent central decomposition after " +
                                                  std::to_string(kAttempts) + " seeds");
}

Equivalence projections_equivalent(const ComplexMatrix& p, const ComplexMatrix& q, const AlgebraContext& ctx,
                                   double tol) {
  const std::size_t n = ctx.group.order() * ctx.mult;
  require_projection(p, n, "P", tol);
  require_projection(q, n, "Q", tol);
  for (const ComplexMatrix* m : {&p, &q}) {
    const CheckResult member = rg_tensor_membership(*m, ctx.group, ctx.mult, tol);
    if (!member.ok) {
      throw Error(ErrorKind::NotInAlgebra, "projection does not commute with λ⊗I (residual " +
                                               std::to_string(member.residual) + ")");
    }
  }
  Equivalence out;
  for (const auto& f : ctx.central_projections) {
    out.ranks_p.push_back(static_cast<std::size_t>(std::max(0L, std::lround(trace(p * f).real()))));
    out.ranks_q.push_back(static_cast<std::size_t>(std::max(0L, std::lround(trace(q * f).real()))));
  }
  out.equivalent = out.ranks_p == out.ranks_q;
  return out;
}

ComplexMatrix intertwiner(const ComplexMatrix& p, const ComplexMatrix& q, const AlgebraContext& ctx,
                          std::uint64_t seed, double tol) {
  const Equivalence eq = projections_equivalent(p, q, ctx, tol);
  if (!eq.equivalent) throw Error(ErrorKind::NotEquivalent, "projections differ in some central block rank");
  const double rank = std::round(trace(p).real());
  const double bound = tol * std::max(1.0, std::sqrt(rank));
  constexpr int kAttempts = 10;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    ComplexNormalStream rng(seed + static_cast<std::uint64_t>(attempt));
    const ComplexMatrix x = random_algebra_element(ctx.group, ctx.mult, rng);
    const ComplexMatrix z = polar_partial_isometry(q * x * p, tol);
    if (std::round(trace(adjoint_times(z, z)).real()) != rank) continue;
    if (fro_norm(adjoint_times(z, z) - p) > bound || fro_norm(times_adjoint(z, z) - q) > bound) continue;
    return z;
  }
  throw Error(ErrorKind::GenericityFailure, "no full-rank compression after " + std::to_string(kAttempts) + " seeds");
}

}  // namespace ovf
