#include <doctest.h>

#include <cmath>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "ovf/duality.hpp"

using namespace ovf;
using ovf::testing::max_diff;

namespace {

double frame_distance(const OVFrame& a, const OVFrame& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.count(); ++j) worst = std::max(worst, max_abs(a.ops[j] - b.ops[j]));
  return worst;
}

OVFrame half_pair() {
  const double h = 1.0 / std::sqrt(2.0);
  return {1, 1, {ComplexMatrix::from_rows({{h}}), ComplexMatrix::from_rows({{h}})}, {}};
}

}  // namespace

TEST_CASE("is_dual: examples") {
  const OVFrame a = random_frame(4, 3, 2, 1);
  CHECK(is_dual(a, canonical_dual(a)).dual);
  CHECK(is_dual(ovf::testing::fx2(), ovf::testing::fx2()).dual);

  // distinct Parseval frames B = Φ_A⁻¹(V) with V a nontrivial partial isometry
  ComplexNormalStream rng(2);
  const OVFrame pa = parsevalize(random_frame(4, 3, 2, rng));
  const OVFrame pb = phi_inverse(pa, random_unitary(8, rng) * analyze(pa).P);
  CHECK(analyze(pb).is_parseval());
  CHECK_FALSE(is_dual(pa, pb).dual);
}

TEST_CASE("is_dual: symmetric residual") {
  ComplexNormalStream rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const OVFrame a = random_frame(4, 3, 2, rng);
    const OVFrame b = random_frame(4, 3, 2, rng);
    const DualCheck ab = is_dual(a, b);
    const DualCheck ba = is_dual(b, a);
    CHECK(ab.residual == ba.residual);
    CHECK(ab.dual == ba.dual);
  }
  CHECK_THROWS_AS(is_dual(random_frame(4, 3, 2, 1), random_frame(4, 2, 2, 1)), Error);
}

TEST_CASE("canonical_dual: examples") {
  ComplexNormalStream rng(4);
  const OVFrame pa = parsevalize(random_frame(4, 3, 2, rng));
  CHECK(frame_distance(canonical_dual(pa), pa) <= 1e-12);

  const OVFrame fx1 = ovf::testing::fx1();
  const ComplexMatrix s_inv = ComplexMatrix::from_rows({{0.75, -0.25}, {-0.25, 0.75}});
  const OVFrame d = canonical_dual(fx1);
  for (std::size_t j = 0; j < 3; ++j) CHECK(max_diff(d.ops[j], fx1.ops[j] * s_inv) <= 1e-15);
  CHECK(max_diff(analyze(d).S, s_inv) <= 1e-14);

  const OVFrame twice{2, 2, {ComplexMatrix::identity(2) * cplx(2.0)}, {}};
  const OVFrame dt = canonical_dual(twice);
  CHECK(max_diff(dt.ops[0], ComplexMatrix::identity(2) * cplx(0.5)) <= 1e-15);
  CHECK(max_diff(dt.ops[0].adjoint() * twice.ops[0], ComplexMatrix::identity(2)) <= 1e-15);
}

TEST_CASE("canonical_dual: involution and frame operator on random frames") {
  ComplexNormalStream rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const OVFrame a = random_frame(5, 3, 2, rng);
    const OVFrame d = canonical_dual(a);
    CHECK(frame_distance(canonical_dual(d), a) <= 1e-9);
    CHECK(fro_norm(analyze(d).S - inverse(analyze(a).S)) <= 1e-9);
  }
}

TEST_CASE("dual_from_parameter: canonical parameter") {
  const OVFrame a = random_frame(4, 3, 2, 6);
  const AnalysisBundle b = analyze(a);
  const ComplexMatrix m = b.theta * psd_power(b.S, -2.0) * b.theta.adjoint();
  const DualFromParameter r = dual_from_parameter(a, m);
  REQUIRE(r.dual.has_value());
  CHECK(frame_distance(*r.dual, canonical_dual(a)) <= 1e-10);
  CHECK(is_dual(a, *r.dual).dual);
}

TEST_CASE("dual_from_parameter: lower-triangular parameter duals differ from the canonical one") {
  const ComplexMatrix p = ovf::testing::uniform_block_projection();
  const OVFrame a = frame_from_projection(p, 2);
  const OVFrame canonical = canonical_dual(a);
  for (double lambda : {1.0, -1.0, 3.0}) {
    const ComplexMatrix m = lift(ovf::testing::lower_triangular_R(lambda), 4) * p;
    const DualFromParameter r = dual_from_parameter(a, m);
    REQUIRE(r.dual.has_value());
    CHECK(is_dual(a, *r.dual).dual);
    CHECK(frame_distance(*r.dual, canonical) >= std::abs(lambda) - 1e-12);
    // B_j = R A_j
    for (std::size_t j = 0; j < 4; ++j) CHECK(max_diff(r.dual->ops[j], ovf::testing::lower_triangular_R(lambda) * a.ops[j]) <= 1e-15);
  }
}

TEST_CASE("dual_from_parameter: perturbed corner is rejected with the expected residual") {
  ComplexNormalStream rng(7);
  const OVFrame a = random_frame(4, 3, 2, rng);
  const AnalysisBundle b = analyze(a);
  const ComplexMatrix m = b.theta * psd_power(b.S, -2.0) * b.theta.adjoint();
  const ComplexMatrix x = b.P * random_matrix(8, 8, rng) * b.P;
  const DualFromParameter r = dual_from_parameter(a, m + x * cplx(0.1));
  CHECK_FALSE(r.dual.has_value());
  CHECK(r.residual == doctest::Approx(0.1 * fro_norm(x)).epsilon(1e-9));

  try {
    dual_from_parameter(a, ComplexMatrix::identity(8));
    FAIL("expected InvalidParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("duals: right-similar duals coincide") {
  ComplexNormalStream rng(8);
  const OVFrame a = frame_from_projection(ovf::testing::uniform_block_projection(), 2);
  const ComplexMatrix p = analyze(a).P;
  const OVFrame b1 = *dual_from_parameter(a, lift(ovf::testing::lower_triangular_R(2.0), 4) * p).dual;
  // B₁T is a dual exactly when T = I: θ_A*θ_{B₁T} = T.
  for (int trial = 0; trial < 4; ++trial) {
    const ComplexMatrix t = ComplexMatrix::identity(4) + random_matrix(4, 4, rng) * cplx(1e-3);
    OVFrame b2 = b1;
    for (auto& op : b2.ops) op = op * t;
    const DualCheck c = is_dual(a, b2);
    CHECK_FALSE(c.dual);
    CHECK(c.residual == doctest::Approx(fro_norm(t - ComplexMatrix::identity(4))).epsilon(1e-6));
  }
  const ComplexMatrix t_same = ComplexMatrix::identity(4);
  OVFrame b2 = b1;
  for (auto& op : b2.ops) op = op * t_same;
  CHECK(is_dual(a, b2).dual);
  CHECK(frame_distance(b1, b2) <= 1e-8);
}

TEST_CASE("duals: Riesz frames have only the canonical dual") {
  ComplexNormalStream rng(9);
  for (int trial = 0; trial < 4; ++trial) {
    const OVFrame a = random_frame(2, 4, 2, rng);  // θ is 4x4 and invertible
    const AnalysisBundle b = analyze(a);
    REQUIRE(b.kind == FrameKind::Riesz);
    // every admissible M equals P M P = θ S⁻² θ*
    const ComplexMatrix m = b.theta * psd_power(b.S, -2.0) * b.theta.adjoint();
    const DualFromParameter r = dual_from_parameter(a, m);
    REQUIRE(r.dual.has_value());
    CHECK(frame_distance(*r.dual, canonical_dual(a)) <= 1e-9);
    const DualFromParameter other = dual_from_parameter(a, m + random_hermitian(4, rng) * cplx(1e-2));
    CHECK_FALSE(other.dual.has_value());
  }
}

TEST_CASE("direct_sum: examples") {
  const DirectSum same = direct_sum(ovf::testing::fx2(), ovf::testing::fx2());
  CHECK(same.verdict.kind == DisjointKind::NotDisjoint);
  CHECK_FALSE(same.frame.has_value());

  ComplexNormalStream rng(10);
  const OVFrame a = parsevalize(random_frame(4, 3, 2, rng));
  const OVFrame b = strong_complement(a);
  const DirectSum sc = direct_sum(a, b);
  CHECK(sc.verdict.kind == DisjointKind::StronglyComplementary);
  REQUIRE(sc.frame.has_value());
  CHECK(analyze(*sc.frame).kind == FrameKind::Orthonormal);

  using ovf::testing::coordinate_projection;
  const OVFrame pa = frame_from_projection(kron(coordinate_projection({1, 0, 0, 0}), ComplexMatrix::identity(2)), 2);
  const OVFrame pb = frame_from_projection(kron(coordinate_projection({0, 1, 1, 0}), ovf::testing::q1()), 2);
  const DirectSum sd = direct_sum(pa, pb);
  CHECK(sd.verdict.kind == DisjointKind::StronglyDisjoint);
  REQUIRE(sd.frame.has_value());
  CHECK(sd.verdict.residuals.at("sum_parseval") <= 1e-12);
}

TEST_CASE("direct_sum: disjoint but not strongly disjoint") {
  // ranges of θ_A and θ_B meet only in zero but are not orthogonal
  ComplexNormalStream rng(11);
  const OVFrame a = random_frame(4, 2, 2, rng);
  const OVFrame b = random_frame(4, 3, 2, rng);
  const DirectSum d = direct_sum(a, b);
  CHECK(d.verdict.kind == DisjointKind::Disjoint);
  CHECK(d.frame.has_value());
}

TEST_CASE("direct_sum: strong disjointness matches vanishing P_A P_B") {
  ComplexNormalStream rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    const OVFrame a = random_frame(4, 3, 2, rng);
    const bool positive = trial % 2 == 0;
    const OVFrame b = positive ? strong_complement(a) : random_frame(4, 3, 2, rng);
    const DirectSum d = direct_sum(a, b);
    const bool small_product = d.verdict.residuals.at("projection_product") <= 1e-8;
    const bool small_gram = d.verdict.residuals.at("cross_gram") <= 1e-8;
    CHECK(small_product == positive);
    CHECK(small_gram == positive);
  }
  CHECK_THROWS_AS(direct_sum(random_frame(4, 3, 2, 1), random_frame(3, 3, 2, 1)), Error);
}

TEST_CASE("strong_complement: examples") {
  try {
    strong_complement(ovf::testing::fx2());
    FAIL("expected NoComplement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoComplement);
  }

  const OVFrame a = half_pair();
  const OVFrame b = strong_complement(a);
  const ComplexMatrix p = analyze(a).P;
  CHECK(max_diff(analyze(b).P, ComplexMatrix::identity(2) - p) <= 1e-14);
  const DirectSum sum = direct_sum(a, b);
  REQUIRE(sum.frame.has_value());
  CHECK(max_diff(analyze(*sum.frame).S, ComplexMatrix::identity(2)) <= 1e-14);

  const ComplexMatrix t = (ComplexMatrix::identity(2) - p) * cplx(2.0);
  const OVFrame scaled = strong_complement(a, t);
  CHECK(max_diff(analyze(scaled).S, ComplexMatrix::identity(1) * cplx(4.0)) <= 1e-14);
}

TEST_CASE("strong_complement: sub-complements and invalid T") {
  ComplexNormalStream rng(13);
  const OVFrame a = random_frame(4, 3, 2, rng);
  const ComplexMatrix p_perp = ComplexMatrix::identity(8) - analyze(a).P;
  const ComplexMatrix w = range_isometry(p_perp);
  const ComplexMatrix sub = w.block(0, 0, 8, 2);
  const ComplexMatrix t = sub * ovf::testing::random_psd(2, 2, rng) * sub.adjoint();
  const OVFrame b = strong_complement(a, t);
  CHECK(b.dim_H == 2);
  CHECK(fro_norm(analyze(b).P - range_projection(t)) <= 1e-9);
  CHECK(direct_sum(a, b).verdict.kind == DisjointKind::StronglyDisjoint);

  CHECK_THROWS_AS(strong_complement(a, ComplexMatrix::identity(8)), Error);
  CHECK_THROWS_AS(strong_complement(a, p_perp * cplx(-1.0)), Error);
}
