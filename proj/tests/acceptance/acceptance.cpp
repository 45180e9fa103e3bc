// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Usage: ovf_acceptance [report.json]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "ovf/duality.hpp"
#include "ovf/io.hpp"
#include "ovf/kernels.hpp"

using namespace ovf;
using io::Json;
using ovf::testing::max_diff;

namespace {

constexpr double kAxiomTol = 1e-9;
constexpr double kBijectionTol = 1e-9;
constexpr double kPartialIsometryTol = 1e-8;
constexpr double kSimilarityRelTol = 1e-7;
constexpr double kConditionTol = 1e-7;
constexpr double kDualTol = 1e-9;
constexpr double kDisjointTol = 1e-9;
constexpr double kDetectTol = 1e-8;
constexpr double kGeneratorTol = 1e-9;
constexpr double kRoundTripTol = 1e-8;
constexpr double kPerturbationFloor = 0.05;
constexpr double kRecoveryTol = 1e-8;
constexpr double kPathTol = 1e-8;
constexpr double kStepSlack = 1e-6;
constexpr double kClosedFormTol = 1e-10;
constexpr std::size_t kPathSamples = 256;

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  Json metrics = Json::object();
  std::string summary;

  void require(bool ok) { pass = pass && ok; }
};

std::vector<FiniteGroup> acceptance_groups() {
  return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
          FiniteGroup::symmetric3(), FiniteGroup::dihedral4(), FiniteGroup::quaternion8()};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double frame_distance(const OVFrame& a, const OVFrame& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.count(); ++j) d = std::max(d, fro_norm(a.ops[j] - b.ops[j]));
  return d;
}

double frame_norm(const OVFrame& a) { return fro_norm(analysis_operator(a)); }

OVFrame times_right(OVFrame f, const ComplexMatrix& t) {
  for (auto& a : f.ops) a = a * t;
  f.dim_H = t.cols();
  return f;
}

// Frame with count·dim_Ho > dim_H drawn from the stream.
OVFrame random_overcomplete(ComplexNormalStream& rng, std::size_t max_count, std::size_t max_dim) {
  for (;;) {
    const std::size_t count = 1 + static_cast<std::size_t>(rng.uniform() * max_count);
    const std::size_t dim_H = 1 + static_cast<std::size_t>(rng.uniform() * max_dim);
    const std::size_t dim_Ho = 1 + static_cast<std::size_t>(rng.uniform() * max_dim);
    if (count * dim_Ho > dim_H) return random_frame(count, dim_H, dim_Ho, rng);
  }
}

Criterion frame_axioms() {
  Criterion c{1, "frame axioms"};
  ComplexNormalStream rng(1001);
  double s_res = 0.0, p_res = 0.0, recon = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const OVFrame f = random_overcomplete(rng, 8, 12);
    const AnalysisBundle b = analyze(f);
    ComplexMatrix sum(f.dim_H, f.dim_H);
    for (const auto& a : f.ops) sum += ovf::testing::naive_product(a.adjoint(), a);
    s_res = std::max(s_res, fro_norm(b.S - sum) / std::max(1.0, fro_norm(sum)));
    p_res = std::max({p_res, fro_norm(b.P * b.P - b.P), hermitian_defect(b.P)});
    const OVFrame back = reconstruct(b.theta, f.dim_Ho, f.count());
    for (std::size_t j = 0; j < f.count(); ++j) recon = std::max(recon, max_abs(back.ops[j] - f.ops[j]));
  }
  c.require(s_res <= kAxiomTol && p_res <= kAxiomTol && recon == 0.0);
  c.metrics = Json{{"frames", 200}, {"frame_operator", s_res}, {"projection", p_res}, {"reconstruction", recon}};
  c.summary = "200 frames; S residual " + fmt(s_res) + ", P residual " + fmt(p_res) + " (<= " + fmt(kAxiomTol) +
              "); reconstruction max diff " + fmt(recon) + " (exact)";
  return c;
}

Criterion parametrization() {
  Criterion c{2, "parametrization bijection"};
  ComplexNormalStream rng(1002);
  double inverse = 0.0, cocycle = 0.0;
  int misclassified = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 2 + trial % 5, dim_H = 1 + trial % 4, dim_Ho = 1 + trial % 3;
    const std::size_t n = std::max(count, (2 * dim_H + dim_Ho - 1) / dim_Ho);
    const OVFrame a = random_frame(n, dim_H, dim_Ho, rng);
    const OVFrame b = random_frame(n, dim_H, dim_Ho, rng);
    const OVFrame cc = random_frame(n, dim_H, dim_Ho, rng);
    inverse = std::max(inverse, frame_distance(phi_inverse(a, phi(a, b).M), b) / std::max(1.0, frame_norm(b)));
    const ComplexMatrix lhs = phi(a, cc).M;
    cocycle = std::max(cocycle, fro_norm(lhs - phi(b, cc).M * phi(a, b).M) / std::max(1.0, fro_norm(lhs)));

    const OVFrame pa = parsevalize(a);
    const ComplexMatrix p = analyze(pa).P;
    for (const OVFrame& target : {b, parsevalize(b)}) {
      const ComplexMatrix m = phi(pa, target).M;
      const bool partial_isometry = fro_norm(adjoint_times(m, m) - p) <= kPartialIsometryTol;
      misclassified += partial_isometry != analyze(target).is_parseval();
    }
  }
  c.require(inverse <= kBijectionTol && cocycle <= kBijectionTol && misclassified == 0);
  c.metrics = Json{{"pairs", 100}, {"inverse", inverse}, {"cocycle", cocycle}, {"misclassified", misclassified}};
  c.summary = "100 pairs; inverse " + fmt(inverse) + ", cocycle " + fmt(cocycle) + " (<= " + fmt(kBijectionTol) +
              "); Parseval/partial-isometry misclassified " + std::to_string(misclassified);
  return c;
}

// Unitary on C^m commuting with the projection q.
ComplexMatrix unitary_commuting_with(const ComplexMatrix& q, ComplexNormalStream& rng) {
  const auto eig = hermitian_eig(q);
  const std::size_t m = q.rows();
  std::size_t zeros = 0;
  while (zeros < m && eig.eigenvalues[zeros] < 0.5) ++zeros;
  ComplexMatrix block(m, m);
  if (zeros > 0) block.set_block(0, 0, random_unitary(zeros, rng));
  if (zeros < m) block.set_block(zeros, zeros, random_unitary(m - zeros, rng));
  return eig.eigenvectors * block * eig.eigenvectors.adjoint();
}

Criterion similarity() {
  Criterion c{3, "similarity"};
  ComplexNormalStream rng(1003);
  double recovery = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim_H = 2 + trial % 3;
    const OVFrame a = random_frame(3 + trial % 3, dim_H, 2, rng);
    const ComplexMatrix t = random_matrix(dim_H, dim_H, rng) + ComplexMatrix::identity(dim_H) * cplx(2.0);
    const SimilarityReport r = right_similarity(a, times_right(a, t));
    recovery = r.right ? std::max(recovery, fro_norm(*r.right - t) / fro_norm(t)) : INFINITY;
  }
  int accepted = 0;
  double min_distance = INFINITY;
  for (int trial = 0; trial < 50; ++trial) {
    const OVFrame a = random_frame(4, 3, 2, rng);
    const OVFrame b = frame_from_projection(range_projection(random_matrix(8, 3, rng)), 2);
    const SimilarityReport r = right_similarity(a, b);
    accepted += r.right.has_value();
    min_distance = std::min(min_distance, r.diagnostics.at("projection_distance"));
  }
  int disagreements = 0, passing = 0;
  for (int trial = 0; trial < 50; ++trial) {
    OVFrame a;
    ComplexMatrix r;
    if (trial % 2 == 0) {
      const ComplexMatrix q = range_projection(random_matrix(3, 1 + trial % 2, rng));
      a = frame_from_projection(kron(ComplexMatrix::identity(4), q), 3);
      r = unitary_commuting_with(q, rng);
    } else {
      a = random_frame(4, 3, 3, rng);
      r = random_unitary(3, rng);
    }
    const Diagnostics d = left_right_compatible(a, r, kConditionTol).diagnostics;
    const bool iii = d.at("iii_R") <= kConditionTol && d.at("iii_Rinv") <= kConditionTol;
    const bool iv = d.at("iv_R") <= kConditionTol && d.at("iv_Rinv") <= kConditionTol;
    const bool vi = d.at("vi_commutator") <= kConditionTol;
    const bool vii = d.at("vii_commutator") <= kConditionTol;
    disagreements += !(iii == iv && iv == vi && vi == vii) || d.at("conditions_agree") != 1.0;
    passing += iii;
  }
  c.require(recovery <= kSimilarityRelTol && accepted == 0 && disagreements == 0 && passing == 25);
  c.metrics = Json{{"recovery", recovery},          {"non_similar_accepted", accepted},
                   {"min_projection_distance", min_distance}, {"condition_disagreements", disagreements},
                   {"condition_passing", passing}};
  c.summary = "T relative error " + fmt(recovery) + " (<= " + fmt(kSimilarityRelTol) + "); non-similar accepted " +
              std::to_string(accepted) + "/50; unitary-R condition disagreements " + std::to_string(disagreements) +
              "/50 (" + std::to_string(passing) + " passing)";
  return c;
}

Criterion duality() {
  Criterion c{4, "duality"};
  ComplexNormalStream rng(1004);
  double canonical = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const OVFrame a = random_overcomplete(rng, 6, 6);
    canonical = std::max(canonical, is_dual(a, canonical_dual(a)).residual);
  }
  int riesz_failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t count = 2 + trial % 3, dim_Ho = 1 + trial % 2;
    const OVFrame a = random_frame(count, count * dim_Ho, dim_Ho, rng);
    const AnalysisBundle b = analyze(a);
    const ComplexMatrix m = b.theta * psd_power(b.S, -2.0) * b.theta.adjoint();
    const DualFromParameter exact = dual_from_parameter(a, m);
    const ComplexMatrix noise = random_hermitian(m.rows(), rng) * cplx(1e-3 * fro_norm(m));
    const DualFromParameter perturbed = dual_from_parameter(a, m + noise);
    const bool ok = b.kind == FrameKind::Riesz && exact.dual &&
                    frame_distance(*exact.dual, canonical_dual(a)) <= 1e-8 && !perturbed.dual;
    riesz_failures += !ok;
  }
  const ComplexMatrix p = ovf::testing::uniform_block_projection();
  const OVFrame fixture = frame_from_projection(p, 2);
  double fixture_residual = 0.0, fixture_distance = INFINITY;
  for (double lambda : {1.0, -1.0, 3.0}) {
    const DualFromParameter r = dual_from_parameter(fixture, lift(ovf::testing::lower_triangular_R(lambda), 4) * p);
    if (!r.dual || !is_dual(fixture, *r.dual).dual) {
      fixture_residual = INFINITY;
      continue;
    }
    fixture_residual = std::max(fixture_residual, is_dual(fixture, *r.dual).residual);
    fixture_distance = std::min(fixture_distance, frame_distance(*r.dual, canonical_dual(fixture)));
  }
  c.require(canonical <= kDualTol && riesz_failures == 0 && fixture_residual <= kDualTol && fixture_distance > 0.1);
  c.metrics = Json{{"canonical_residual", canonical},
                   {"riesz_failures", riesz_failures},
                   {"fixture_residual", fixture_residual},
                   {"fixture_distance_from_canonical", fixture_distance}};
  c.summary = "canonical dual residual " + fmt(canonical) + " (<= " + fmt(kDualTol) + "); Riesz failures " +
              std::to_string(riesz_failures) + "/20; shear fixture residual " + fmt(fixture_residual) +
              ", distance from canonical " + fmt(fixture_distance);
  return c;
}

Criterion disjointness() {
  Criterion c{5, "disjointness"};
  ComplexNormalStream rng(1005);
  double gram = 0.0, proj = 0.0;
  int not_complementary = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const OVFrame a = parsevalize(random_frame(3 + trial % 3, 2 + trial % 2, 2, rng));
    const DirectSum s = direct_sum(a, strong_complement(a));
    if (!s.frame || s.verdict.kind != DisjointKind::StronglyComplementary) {
      ++not_complementary;
      continue;
    }
    const AnalysisBundle b = analyze(*s.frame);
    gram = std::max(gram, fro_norm(adjoint_times(b.theta, b.theta) - ComplexMatrix::identity(b.theta.cols())));
    proj = std::max(proj, fro_norm(b.P - ComplexMatrix::identity(b.P.rows())));
  }
  int disagreements = 0, detected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const OVFrame a = random_frame(4, 3, 2, rng);
    OVFrame b;
    if (trial % 2 == 0) {
      const ComplexMatrix w = range_isometry(ComplexMatrix::identity(8) - analyze(a).P);
      const ComplexMatrix sub = w.block(0, 0, 8, 1 + trial % 5);
      b = strong_complement(a, sub * ovf::testing::random_psd(sub.cols(), sub.cols(), rng) * sub.adjoint());
    } else {
      b = random_frame(4, 3, 2, rng);
    }
    const Diagnostics r = direct_sum(a, b).verdict.residuals;
    const bool by_projection = r.at("projection_product") <= kDetectTol;
    const bool by_gram = r.at("cross_gram") <= kDetectTol;
    disagreements += by_projection != by_gram || by_projection != (trial % 2 == 0);
    detected += by_projection;
  }
  c.require(not_complementary == 0 && gram <= kDisjointTol && proj <= kDisjointTol && disagreements == 0);
  c.metrics = Json{{"complementary_failures", not_complementary},
                   {"orthonormal_residual", gram},
                   {"sum_projection_residual", proj},
                   {"detection_disagreements", disagreements},
                   {"detected", detected}};
  c.summary = "complementary sums ||theta*theta - I|| " + fmt(gram) + ", ||P - I|| " + fmt(proj) + " (<= " +
              fmt(kDisjointTol) + "); strong-disjointness criteria disagree " + std::to_string(disagreements) + "/50";
  return c;
}

Criterion group_machinery() {
  Criterion c{6, "group machinery"};
  ComplexNormalStream rng(1006);
  double lemma = 0.0, round_trip = 0.0, forward = 0.0, min_perturbed = INFINITY;
  int rejected = 0, redundant = 0, trials = 0, bad_blocks = 0;
  std::vector<std::size_t> s3_ranks;
  for (const FiniteGroup& g : acceptance_groups()) {
    for (std::size_t mult : {1u, 2u}) {
      ++trials;
      const SubRep sub = ovf::testing::random_subrep(g, mult, rng);
      round_trip = std::max({round_trip, sub.projection_residual, sub.rep.defect()});
      for (const ComplexMatrix& a : {sub.A, ovf::testing::positive_commutant_twist(sub.A, sub.rep, rng)}) {
        const GeneratorOrbit o = generator_orbit(a, sub.rep);
        for (const auto& [name, value] : o.diagnostics) lemma = std::max(lemma, value);
      }
      const OVFrame orbit = generator_orbit(sub.A, sub.rep).frame;
      const GroupFrameRep back = group_frame_to_rep(orbit, g);
      forward = std::max(forward, back.residual);
      if (back.rep) round_trip = std::max(round_trip, back.diagnostics.at("generator_reconstruction"));

      // An orthonormal basis indexed by G is always a group frame, so only
      // redundant orbits can lose the structure under perturbation.
      OVFrame perturbed = orbit;
      perturbed.ops[1 % g.order()](0, 0) += 0.1;
      perturbed = parsevalize(perturbed);
      if (analyze(perturbed).kind != FrameKind::Orthonormal) {
        ++redundant;
        const GroupFrameRep pr = group_frame_to_rep(perturbed, g);
        min_perturbed = std::min(min_perturbed, pr.residual);
        rejected += !pr.rep.has_value();
      }

      const AlgebraContext ctx = central_projections(g, mult, 0);
      std::size_t squares = 0;
      for (std::size_t k = 0; k < ctx.block_dims.size(); ++k) {
        squares += ctx.block_dims[k] * ctx.block_dims[k];
        const auto rank = static_cast<std::size_t>(std::lround(trace(ctx.central_projections[k]).real()));
        bad_blocks += rank != ctx.block_dims[k] * ctx.block_dims[k] * mult;
      }
      bad_blocks += squares != g.order();
      if (g.name() == "S3" && mult == 1) {
        for (std::size_t d : ctx.block_dims) s3_ranks.push_back(d * d);
        std::sort(s3_ranks.begin(), s3_ranks.end());
      }
    }
  }
  const bool s3_ok = s3_ranks == std::vector<std::size_t>{1, 1, 4};
  OVFrame mercedes = ovf::testing::mercedes();
  const double mercedes_before = group_frame_to_rep(mercedes, FiniteGroup::cyclic(3)).residual;
  mercedes.ops[1](0, 0) += 0.1;
  const GroupFrameRep mercedes_after = group_frame_to_rep(parsevalize(mercedes), FiniteGroup::cyclic(3));
  const bool mercedes_ok = mercedes_before <= kGeneratorTol && !mercedes_after.rep && mercedes_after.residual > kPerturbationFloor;
  c.require(lemma <= kGeneratorTol && round_trip <= kRoundTripTol && forward <= kGeneratorTol && rejected == redundant &&
            mercedes_ok && bad_blocks == 0 && s3_ok);
  c.metrics = Json{{"cases", trials},          {"orbit_identities", lemma},  {"round_trip", round_trip},
                   {"forward", forward},       {"perturbations_rejected", rejected},
                   {"redundant_orbits", redundant}, {"min_perturbed_residual", min_perturbed},
                   {"mercedes_perturbed_residual", mercedes_after.residual}, {"bad_central_blocks", bad_blocks},
                   {"s3_block_squares", s3_ranks}};
  c.summary = std::to_string(trials) + " group/multiplicity cases; orbit identities " + fmt(lemma) + " (<= " +
              fmt(kGeneratorTol) + "), round trip " + fmt(round_trip) + " (<= " + fmt(kRoundTripTol) + "), forward " +
              fmt(forward) + "; perturbed redundant orbits rejected " + std::to_string(rejected) + "/" + std::to_string(redundant) +
              " (min residual " + fmt(min_perturbed) + "); perturbed Mercedes residual " +
              fmt(mercedes_after.residual) + " (> " + fmt(kPerturbationFloor) + "); S3 blocks " +
              (s3_ok ? "1+1+4" : "wrong");
  return c;
}

Criterion generator_parametrization() {
  Criterion c{7, "generator parametrization"};
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const RegularReps reps = regular_reps(s3);
  int misclassified = 0, tested = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ComplexNormalStream rng(2000 + seed);
    const ComplexMatrix y = random_matrix(2, 2, rng);
    for (std::size_t g = 0; g < s3.order(); ++g) {
      misclassified += !rg_tensor_membership(kron(reps.rho(g), y), s3, 2).ok;
      const bool lambda_member = rg_tensor_membership(kron(reps.lambda(g), y), s3, 2).ok;
      misclassified += lambda_member != (g == s3.identity());
      tested += 2;
    }
  }
  ComplexNormalStream rng(1007);
  double recovery = 0.0;
  int missing = 0;
  for (const FiniteGroup& g : acceptance_groups()) {
    for (std::size_t mult : {1u, 2u}) {
      const auto pair = ovf::testing::parseval_pair(g, mult, rng);
      const ComplexMatrix theta_a = generator_orbit(pair.a, pair.sub.rep).bundle.theta;
      const ComplexMatrix theta_b = generator_orbit(pair.b, pair.sub.rep).bundle.theta;
      const ComplexMatrix v = times_adjoint(theta_b, theta_a);
      const GeneratorParameterResult r = generator_parametrize(pair.a, pair.sub.rep, v);
      if (!r.B) {
        ++missing;
        continue;
      }
      const ComplexMatrix theta_r = generator_orbit(*r.B, pair.sub.rep).bundle.theta;
      recovery = std::max({recovery, fro_norm(*r.B - pair.b), fro_norm(times_adjoint(theta_r, theta_a) - v)});
    }
  }
  c.require(misclassified == 0 && missing == 0 && recovery <= kRecoveryTol);
  c.metrics = Json{{"membership_tests", tested},
                   {"misclassified", misclassified},
                   {"parseval_recovery", recovery},
                   {"missing", missing}};
  c.summary = "S3 membership misclassified " + std::to_string(misclassified) + "/" + std::to_string(tested) +
              "; Parseval parameter recovery " + fmt(recovery) + " (<= " + fmt(kRecoveryTol) + ")";
  return c;
}

Criterion homotopy() {
  Criterion c{8, "homotopy"};
  ComplexNormalStream rng(1008);
  double endpoint = 0.0, sample = 0.0, step_excess = -INFINITY, general_sample = 0.0, general_endpoint = 0.0;
  int paths = 0, failures = 0;
  for (const FiniteGroup& g : acceptance_groups()) {
    for (std::size_t mult : {1u, 2u, 3u}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto pair = ovf::testing::parseval_pair(g, mult, rng);
        const FramePath p = connect_parseval(pair.a, pair.b, pair.sub.rep, kPathSamples, seed);
        const PathReport pr = verify_path(p, pair.sub.rep, kPathTol);
        endpoint = std::max(endpoint, pr.end_residual);
        sample = std::max(sample, pr.max_sample_residual);
        step_excess = std::max(step_excess, p.max_step - (std::numbers::pi * p.h_norm / kPathSamples + kStepSlack));
        failures += !pr.ok;

        const ComplexMatrix a = ovf::testing::positive_commutant_twist(pair.a, pair.sub.rep, rng);
        const ComplexMatrix b = ovf::testing::positive_commutant_twist(pair.b, pair.sub.rep, rng);
        const FramePath q = connect_general(a, b, pair.sub.rep, kPathSamples, seed);
        const PathReport qr = verify_path(q, pair.sub.rep, kPathTol);
        general_endpoint = std::max({general_endpoint, qr.start_residual, qr.end_residual});
        general_sample = std::max(general_sample, qr.max_sample_residual);
        failures += !qr.ok;
        paths += 2;
      }
    }
  }
  const GroupRep lambda = regular_reps(FiniteGroup::cyclic(2)).lambda;
  const FramePath z2 = connect_parseval(ComplexMatrix::from_rows({{1.0, 0.0}}), ComplexMatrix::from_rows({{0.0, 1.0}}),
                                        lambda, kPathSamples);
  const ComplexMatrix h = (ComplexMatrix::identity(2) - lambda(1)) * cplx(std::numbers::pi / 2.0);
  double closed_form = 0.0;
  for (const auto& s : z2.samples) {
    closed_form = std::max(closed_form, max_diff(s.generator, ovf::testing::expi_taylor(h * cplx(s.t)).block(0, 0, 1, 2)));
  }
  c.require(failures == 0 && endpoint <= kPathTol && sample <= kPathTol && step_excess <= 0.0 &&
            general_endpoint <= kPathTol && closed_form <= kClosedFormTol);
  c.metrics = Json{{"paths", paths},
                   {"failed_verifications", failures},
                   {"parseval_endpoint", endpoint},
                   {"parseval_sample", sample},
                   {"step_excess", step_excess},
                   {"general_endpoint", general_endpoint},
                   {"general_sample_deficit", general_sample},
                   {"z2_closed_form", closed_form}};
  c.summary = std::to_string(paths) + " paths of " + std::to_string(kPathSamples) + " steps; Parseval endpoint " +
              fmt(endpoint) + ", sample " + fmt(sample) + " (<= " + fmt(kPathTol) + "); max_step - budget " +
              fmt(step_excess) + " (<= 0); failed verifications " + std::to_string(failures) + "; Z2 closed form " +
              fmt(closed_form) + " (<= " + fmt(kClosedFormTol) + ")";
  return c;
}

std::vector<Criterion> run_suite() {
  return {frame_axioms(), parametrization(), similarity(), duality(), disjointness(),
          group_machinery(), generator_parametrization(), homotopy()};
}

Json suite_report(const std::vector<Criterion>& criteria) {
  Json list = Json::array();
  for (const auto& c : criteria) list.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"metrics", c.metrics}});
  return Json{{"version", io::kVersion}, {"criteria", std::move(list)}};
}

void print(const Criterion& c) {
  std::printf("[%s] %d %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.summary.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const kernels::Isa isa = kernels::active_isa();
    const std::vector<Criterion> first = run_suite();
    for (const auto& c : first) print(c);
    const std::string report = io::dump(suite_report(first));

    const std::string repeat = io::dump(suite_report(run_suite()));
    kernels::set_active_isa(kernels::Isa::Scalar);
    const std::string scalar = io::dump(suite_report(run_suite()));
    kernels::set_active_isa(isa);

    Criterion det{9, "determinism"};
    det.require(report == repeat && report == scalar);
    det.summary = std::string("repeat run ") + (report == repeat ? "byte-identical" : "differs") + ", " +
                  std::string(kernels::to_string(isa)) + " vs scalar kernels " +
                  (report == scalar ? "byte-identical" : "differs") + " (" + std::to_string(report.size()) +
                  "-byte report)";
    print(det);

    if (argc > 1) io::write_text_file(argv[1], report);
    bool all = det.pass;
    for (const auto& c : first) all = all && c.pass;
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
}
