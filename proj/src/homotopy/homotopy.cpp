#include "ovf/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ovf {

namespace {

ComplexMatrix identity_block_rows(const ComplexMatrix& m, const FiniteGroup& g, std::size_t mult) {
  return m.block(g.identity() * mult, 0, mult, m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep) {
  if (a.cols() != rep.dim || b.cols() != rep.dim || a.rows() != b.rows() || a.rows() == 0) {
    throw Error(ErrorKind::NotSameRep, "generators must both map C^" + std::to_string(rep.dim) +
                                           " into the same space");
  }
}

// Frame operator Σ_g π_g A*A π_g* of the orbit, built as θ*θ.
ComplexMatrix orbit_frame_operator(const ComplexMatrix& a, const GroupRep& rep) {
  ComplexMatrix s(rep.dim, rep.dim);
  for (std::size_t g = 0; g < rep.group.order(); ++g) {
    const ComplexMatrix block = a * rep(g);
    s += adjoint_times(block, block);
  }
  return hermitian_part(s);
}

// Spectral data of S for t ↦ S^{-t/2}.
struct PositiveLeg {
  ComplexMatrix base;
  EigDecomposition eig;
  double derivative = 0.0;  // bound on ‖d/ds base·S^{-s/2}‖ over s ∈ [0, 1]

  PositiveLeg(const ComplexMatrix& a, const GroupRep& rep, double tol) : base(a) {
    eig = hermitian_eig(orbit_frame_operator(a, rep), tol);
    const double lo = eig.eigenvalues.front(), hi = eig.eigenvalues.back();
    if (!(lo > tol * hi)) throw Error(ErrorKind::NotAFrame, "orbit of the generator is not a frame");
    const double log_spread = std::max(std::abs(std::log(lo)), std::abs(std::log(hi)));
    derivative = op_norm(a) * 0.5 * log_spread * std::max(1.0, 1.0 / std::sqrt(lo));
  }

  ComplexMatrix at(double s) const {
    std::vector<cplx> values(eig.eigenvalues.size());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = std::pow(eig.eigenvalues[k], -0.5 * s);
    return base * spectral_apply(eig, values);
  }
};

double max_adjacent_step(const std::vector<PathSample>& samples) {
  double worst = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    worst = std::max(worst, op_norm(samples[i].generator - samples[i - 1].generator));
  return worst;
}

}  // namespace

ParsevalGeodesic::ParsevalGeodesic(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep,
                                   std::uint64_t seed, double tol) {
  require_same_shape(a, b, rep);
  const std::size_t mult = a.rows();
  const GeneratorOrbit oa = generator_orbit(a, rep, tol);
  const GeneratorOrbit ob = generator_orbit(b, rep, tol);
  if (!oa.bundle.is_parseval() || !ob.bundle.is_parseval()) {
    throw Error(ErrorKind::NotParseval, "both generators must generate Parseval frames");
  }
  const std::size_t n = oa.bundle.theta.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  p_a_ = oa.bundle.P;
  const ComplexMatrix v_b = times_adjoint(ob.bundle.theta, oa.bundle.theta);
  const ComplexMatrix pa_perp = hermitian_part(id - oa.bundle.P);
  const ComplexMatrix pb_perp = hermitian_part(id - ob.bundle.P);

  ComplexMatrix z(n, n);
  if (std::round(trace(pa_perp).real()) > 0.0) {
    try {
      const AlgebraContext ctx = central_projections(rep.group, mult, seed, tol);
      z = intertwiner(pa_perp, pb_perp, ctx, seed, tol);
    } catch (const Error& e) {
      throw Error(ErrorKind::AlgebraFailure, std::string("complement intertwiner: ") + e.what());
    }
  }
  u_ = v_b + z;
  try {
    h_ = unitary_log(u_, tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::AlgebraFailure, std::string("V_B + Z is not unitary: ") + e.what());
  }
  const EigDecomposition eig = hermitian_eig(h_, tol);
  phases_ = eig.eigenvalues;
  x_ = eig.eigenvectors;
  h_norm_ = std::max(std::abs(phases_.front()), std::abs(phases_.back()));
  x_e_ = identity_block_rows(x_, rep.group, mult);
  y_ = adjoint_times(x_, oa.bundle.theta);
}

ComplexMatrix ParsevalGeodesic::generator(double t) const {
  ComplexMatrix scaled = y_;
  for (std::size_t k = 0; k < phases_.size(); ++k) {
    const cplx phase = std::polar(1.0, t * phases_[k]);
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(k, c) *= phase;
  }
  return x_e_ * scaled;
}

ComplexMatrix ParsevalGeodesic::isometry(double t) const {
  std::vector<cplx> values(phases_.size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = std::polar(1.0, t * phases_[k]);
  return spectral_apply({phases_, x_}, values) * p_a_;
}

FramePath connect_parseval(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep, std::size_t n_samples,
                           std::uint64_t seed, double tol) {
  if (n_samples == 0) throw Error(ErrorKind::InvalidParameter, "path needs at least one step");
  const ParsevalGeodesic geo(a, b, rep, seed, tol);
  FramePath path;
  path.start = a;
  path.end = b;
  path.parseval = true;
  path.seed = seed;
  path.sample_count = n_samples;
  path.h_norm = geo.h_norm();
  path.lipschitz = std::numbers::pi * geo.h_norm();
  for (std::size_t i = 0; i <= n_samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n_samples);
    path.samples.push_back({t, i == 0 ? a : geo.generator(t)});
  }
  path.max_step = max_adjacent_step(path.samples);
  return path;
}

FramePath connect_general(const ComplexMatrix& a, const ComplexMatrix& b, const GroupRep& rep, std::size_t n_samples,
                          std::uint64_t seed, double tol) {
  if (n_samples == 0) throw Error(ErrorKind::InvalidParameter, "path needs at least one step");
  require_same_shape(a, b, rep);
  const PositiveLeg out(a, rep, tol);
  const PositiveLeg back(b, rep, tol);
  const ParsevalGeodesic geo(out.at(1.0), back.at(1.0), rep, seed, tol);

  FramePath path;
  path.start = a;
  path.end = b;
  path.seed = seed;
  path.sample_count = n_samples;
  path.h_norm = geo.h_norm();
  path.lipschitz = 3.0 * std::max({out.derivative, back.derivative, std::numbers::pi * geo.h_norm()});
  for (std::size_t i = 0; i <= n_samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n_samples);
    ComplexMatrix g;
    if (i == 0) {
      g = a;
    } else if (i == n_samples) {
      g = b;
    } else if (3.0 * t <= 1.0) {
      g = out.at(3.0 * t);
    } else if (3.0 * t < 2.0) {
      g = geo.generator(3.0 * t - 1.0);
    } else {
      g = back.at(3.0 * (1.0 - t));
    }
    path.samples.push_back({t, std::move(g)});
  }
  path.max_step = max_adjacent_step(path.samples);
  return path;
}

PathReport verify_path(const FramePath& path, const GroupRep& rep, double tol) {
  PathReport r;
  auto fail = [&](std::optional<std::size_t> index, std::string why) {
    if (index && !r.first_bad_sample) r.first_bad_sample = index;
    r.failures.push_back(std::move(why));
  };
  if (path.samples.size() < 2) {
    fail(std::nullopt, "path has fewer than two samples");
    return r;
  }
  const auto& s = path.samples;
  if (s.front().t != 0.0 || s.back().t != 1.0) fail(std::nullopt, "samples must start at t=0 and end at t=1");

  double max_dt = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string at = "sample " + std::to_string(i);
    const ComplexMatrix& g = s[i].generator;
    if (g.cols() != rep.dim || g.rows() != path.start.rows()) {
      fail(i, at + ": wrong shape");
      continue;
    }
    const ComplexMatrix frame_op = orbit_frame_operator(g, rep);
    double residual;
    if (path.parseval) {
      residual = fro_norm(frame_op - ComplexMatrix::identity(rep.dim));
    } else {
      const auto spectrum = hermitian_eig(frame_op, tol).eigenvalues;
      residual = spectrum.back() > 0.0 ? std::max(0.0, tol - spectrum.front() / spectrum.back()) : 1.0;
    }
    r.max_sample_residual = std::max(r.max_sample_residual, residual);
    if (path.parseval ? residual > tol : residual > 0.0) {
      fail(i, at + (path.parseval ? ": not a Parseval generator" : ": not a generator"));
    }
    if (i == 0) continue;
    const double dt = s[i].t - s[i - 1].t;
    if (!(dt > 0.0)) {
      fail(i, at + ": t is not increasing");
      continue;
    }
    max_dt = std::max(max_dt, dt);
    const double step = op_norm(g - s[i - 1].generator);
    r.max_step = std::max(r.max_step, step);
    if (step > path.lipschitz * dt + 1e-12) fail(i, at + ": step exceeds the Lipschitz budget");
  }
  r.step_budget = path.lipschitz * max_dt;

  if (s.front().generator.rows() == path.start.rows() && s.front().generator.cols() == path.start.cols())
    r.start_residual = op_norm(s.front().generator - path.start);
  else
    r.start_residual = INFINITY;
  if (s.back().generator.rows() == path.end.rows() && s.back().generator.cols() == path.end.cols())
    r.end_residual = op_norm(s.back().generator - path.end);
  else
    r.end_residual = INFINITY;
  if (r.start_residual != 0.0) fail(0, "first sample differs from the start generator");
  if (r.end_residual > tol) fail(s.size() - 1, "last sample differs from the end generator");

  r.ok = r.failures.empty();
  return r;
}

}  // namespace ovf
