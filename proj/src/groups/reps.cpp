#include <algorithm>
#include <cmath>
#include <string>

#include "ovf/groups.hpp"

namespace ovf {

namespace {

ComplexMatrix permutation(std::size_t n, const std::vector<std::size_t>& image) {
  ComplexMatrix m(n, n);
  for (std::size_t h = 0; h < n; ++h) m(image[h], h) = 1.0;
  return m;
}

void require_square(const ComplexMatrix& m, std::size_t n, const char* what) {
  if (!m.is_square() || m.rows() != n) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  }
}

}  // namespace

double GroupRep::defect() const {
  if (matrices.size() != group.order()) return INFINITY;
  const ComplexMatrix id = ComplexMatrix::identity(dim);
  double worst = fro_norm(matrices[group.identity()] - id);
  for (std::size_t g = 0; g < group.order(); ++g) {
    worst = std::max(worst, fro_norm(adjoint_times(matrices[g], matrices[g]) - id));
    for (std::size_t h = 0; h < group.order(); ++h)
      worst = std::max(worst, fro_norm(matrices[g] * matrices[h] - matrices[group.mul(g, h)]));
  }
  return worst;
}

void GroupRep::validate(double tol) const {
  if (dim == 0 || matrices.size() != group.order()) {
    throw Error(ErrorKind::DimensionMismatch, "representation needs one matrix per group element");
  }
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    require_square(matrices[g], dim, ("matrix " + std::to_string(g)).c_str());
    if (fro_norm(adjoint_times(matrices[g], matrices[g]) - ComplexMatrix::identity(dim)) > tol) {
      throw Error(ErrorKind::NonUnitary, "matrix " + std::to_string(g) + " is not unitary");
    }
  }
  if (defect() > tol) throw Error(ErrorKind::InvalidParameter, "matrices are not multiplicative");
}

RegularReps regular_reps(const FiniteGroup& g) {
  const std::size_t n = g.order();
  RegularReps r{{g, n, {}}, {g, n, {}}};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> left(n), right(n);
    for (std::size_t h = 0; h < n; ++h) {
      left[h] = g.mul(x, h);
      right[h] = g.mul(h, g.inv(x));
    }
    r.lambda.matrices.push_back(permutation(n, left));
    r.rho.matrices.push_back(permutation(n, right));
  }
  return r;
}

GroupRep tensor_rep(const FiniteGroup& g, std::size_t mult) {
  GroupRep lambda = regular_reps(g).lambda;
  if (mult == 1) return lambda;
  for (auto& m : lambda.matrices) m = kron(m, ComplexMatrix::identity(mult));
  lambda.dim *= mult;
  return lambda;
}

GroupRep tensor_rho(const FiniteGroup& g, std::size_t mult) {
  GroupRep rho = regular_reps(g).rho;
  if (mult == 1) return rho;
  for (auto& m : rho.matrices) m = kron(m, ComplexMatrix::identity(mult));
  rho.dim *= mult;
  return rho;
}

GroupRep trivial_rep(const FiniteGroup& g, std::size_t dim) {
  return {g, dim, std::vector<ComplexMatrix>(g.order(), ComplexMatrix::identity(dim))};
}

GeneratorOrbit generator_orbit(const ComplexMatrix& a, const GroupRep& rep, double tol) {
  if (a.cols() != rep.dim || a.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "generator must have " + std::to_string(rep.dim) + " columns");
  }
  const FiniteGroup& grp = rep.group;
  GeneratorOrbit out;
  out.frame.dim_H = rep.dim;
  out.frame.dim_Ho = a.rows();
  for (std::size_t g = 0; g < grp.order(); ++g) out.frame.ops.push_back(a * rep(grp.inv(g)));
  out.bundle = analyze_frame(out.frame, tol);

  const GroupRep lifted = tensor_rep(grp, a.rows());
  double intertwining = 0.0, s_comm = 0.0, p_comm = 0.0;
  for (std::size_t g = 0; g < grp.order(); ++g) {
    intertwining = std::max(intertwining, fro_norm(out.bundle.theta * rep(g) - lifted(g) * out.bundle.theta));
    s_comm = std::max(s_comm, fro_norm(out.bundle.S * rep(g) - rep(g) * out.bundle.S));
    p_comm = std::max(p_comm, fro_norm(out.bundle.P * lifted(g) - lifted(g) * out.bundle.P));
  }
  out.diagnostics["intertwining"] = intertwining;
  out.diagnostics["frame_operator_commutant"] = s_comm;
  out.diagnostics["projection_commutant"] = p_comm;
  return out;
}

SubRep subrep_from_projection(const FiniteGroup& g, std::size_t mult, const ComplexMatrix& p, double tol) {
  const std::size_t n = g.order() * mult;
  require_square(p, n, "projection");
  if (hermitian_defect(p) > tol || fro_norm(p * p - p) > tol * std::max(1.0, fro_norm(p))) {
    throw Error(ErrorKind::NotAProjection, "matrix is not an orthogonal projection");
  }
  const CheckResult member = rg_tensor_membership(p, g, mult, tol);
  if (!member.ok) {
    throw Error(ErrorKind::NotInvariant, "projection does not commute with λ⊗I (residual " +
                                             std::to_string(member.residual) + ")");
  }
  ComplexMatrix w = range_isometry(p, tol);
  if (w.cols() == 0) throw Error(ErrorKind::NotAProjection, "projection is zero");
  const GroupRep lifted = tensor_rep(g, mult);
  GroupRep rep{g, w.cols(), {}};
  for (std::size_t x = 0; x < g.order(); ++x) rep.matrices.push_back(adjoint_times(w, lifted(x) * w));
  ComplexMatrix a = w.block(g.identity() * mult, 0, mult, w.cols());
  SubRep out{std::move(rep), std::move(w), std::move(a), 0.0};
  const GeneratorOrbit orbit = generator_orbit(out.A, out.rep, tol);
  out.projection_residual = fro_norm(orbit.bundle.P - hermitian_part(p));
  return out;
}

GroupFrameRep group_frame_to_rep(const OVFrame& f, const FiniteGroup& g, double tol) {
  f.validate();
  if (f.count() != g.order()) {
    throw Error(ErrorKind::DimensionMismatch, "frame has " + std::to_string(f.count()) + " operators, group order is " +
                                                  std::to_string(g.order()));
  }
  const AnalysisBundle bundle = analyze(f, tol);
  if (!bundle.is_parseval()) throw Error(ErrorKind::NotParseval, "group frame condition needs a Parseval frame");

  const std::size_t n = g.order();
  std::vector<std::vector<ComplexMatrix>> gram(n, std::vector<ComplexMatrix>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) gram[p][q] = times_adjoint(f.ops[p], f.ops[q]);
  GroupFrameRep out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        out.residual = std::max(out.residual, fro_norm(gram[g.mul(x, p)][g.mul(x, q)] - gram[p][q]));
  out.diagnostics["condition"] = out.residual;
  if (out.residual > tol) return out;

  const GroupRep lifted = tensor_rep(g, f.dim_Ho);
  GroupRep rep{g, f.dim_H, {}};
  for (std::size_t x = 0; x < n; ++x) rep.matrices.push_back(adjoint_times(bundle.theta, lifted(x) * bundle.theta));
  double reconstruction = 0.0;
  const ComplexMatrix& a_e = f.ops[g.identity()];
  for (std::size_t x = 0; x < n; ++x)
    reconstruction = std::max(reconstruction, fro_norm(f.ops[x] - a_e * rep(g.inv(x))));
  out.diagnostics["rep_defect"] = rep.defect();
  out.diagnostics["generator_reconstruction"] = reconstruction;
  out.rep = std::move(rep);
  return out;
}

CheckResult local_commutant_check(const ComplexMatrix& v, const ComplexMatrix& a, const std::vector<ComplexMatrix>& system,
                                  double tol) {
  CheckResult out;
  const ComplexMatrix a_adj = a.adjoint();
  for (const auto& u : system) out.residual = std::max(out.residual, fro_norm((v * u - u * v) * a_adj));
  out.ok = out.residual <= tol;
  return out;
}

ComplexMatrix slice_map(const ComplexMatrix& z, const FiniteGroup& g, std::size_t mult) {
  require_square(z, g.order() * mult, "slice map argument");
  return z.block(g.identity() * mult, g.identity() * mult, mult, mult);
}

CheckResult rg_tensor_membership(const ComplexMatrix& m, const FiniteGroup& g, std::size_t mult, double tol) {
  require_square(m, g.order() * mult, "algebra element");
  const GroupRep lifted = tensor_rep(g, mult);
  CheckResult out;
  for (std::size_t x = 0; x < g.order(); ++x)
    out.residual = std::max(out.residual, fro_norm(m * lifted(x) - lifted(x) * m));
  out.ok = out.residual <= tol * std::max(1.0, fro_norm(m));
  return out;
}

ComplexMatrix commutant_average(const GroupRep& rep, const ComplexMatrix& x) {
  ComplexMatrix sum(x.rows(), x.cols());
  for (const auto& u : rep.matrices) sum += u * x * u.adjoint();
  return sum * cplx(1.0 / static_cast<double>(rep.matrices.size()));
}

ComplexMatrix random_algebra_element(const FiniteGroup& g, std::size_t mult, ComplexNormalStream& rng) {
  const GroupRep rho = regular_reps(g).rho;
  ComplexMatrix x(g.order() * mult, g.order() * mult);
  for (std::size_t h = 0; h < g.order(); ++h) x += kron(rho(h), random_matrix(mult, mult, rng));
  return x;
}

GeneratorParameterResult generator_parametrize(const ComplexMatrix& a, const GroupRep& rep, const ComplexMatrix& m,
                                               double tol) {
  const GeneratorOrbit orbit = generator_orbit(a, rep, tol);
  const std::size_t mult = a.rows();
  const FiniteGroup& g = rep.group;
  const ParameterCheck check = check_parameter(orbit.bundle, m, tol);
  if (!check.valid) {
    throw Error(ErrorKind::InvalidParameter, "‖M - M P_A‖ = " + std::to_string(check.right_residual) +
                                                 ", smallest eigenvalue on range(P_A) = " +
                                                 std::to_string(check.min_eigenvalue));
  }
  GeneratorParameterResult out;
  const CheckResult member = rg_tensor_membership(m, g, mult, tol);
  out.diagnostics["membership"] = member.residual;
  if (!member.ok) return out;

  const ComplexMatrix m_theta = m * orbit.bundle.theta;
  ComplexMatrix b = m_theta.block(g.identity() * mult, 0, mult, rep.dim);
  const GeneratorOrbit certified = generator_orbit(b, rep, tol);
  out.diagnostics["generator_intertwining"] = certified.diagnostics.at("intertwining");
  out.diagnostics["orbit_reconstruction"] = fro_norm(certified.bundle.theta - m_theta);
  if (orbit.bundle.is_parseval() && fro_norm(adjoint_times(m, m) - orbit.bundle.P) <= tol) {
    out.diagnostics["parseval_defect"] = fro_norm(certified.bundle.S - ComplexMatrix::identity(rep.dim));
    out.diagnostics["partial_isometry_recovery"] =
        fro_norm(times_adjoint(certified.bundle.theta, orbit.bundle.theta) - m);
  }
  out.B = std::move(b);
  return out;
}

}  // namespace ovf
