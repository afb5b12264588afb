#include <catch2/catch_amalgamated.hpp>

#include "torsionlab/clifford_s7.hpp"
#include "torsionlab/g2.hpp"

using namespace torsionlab;

namespace {

const s7::CliffordRep7& rep() {
  static const s7::CliffordRep7 r = s7::build_clifford7();
  return r;
}

AltForm rotated_phi(Rng& rng) {
  return transform_form(g2::standard_form(), random_special_orthogonal(7, rng));
}

}  // namespace

TEST_CASE("stabilizer dimensions") {
  REQUIRE(g2::stabilizer_algebra(g2::standard_form()).dimension() == 14);
  REQUIRE(g2::stabilizer_algebra(AltForm(7, 3)).dimension() == 21);
  // decomposable form: so(3) of the supporting block plus so(4) of the complement
  REQUIRE(g2::stabilizer_algebra(AltForm::basis(7, {1, 2, 3})).dimension() == 9);
  Rng rng(51);
  REQUIRE(g2::stabilizer_algebra(rotated_phi(rng)).dimension() == 14);
}

TEST_CASE("stabilizer basis annihilates omega and is closed") {
  const AltForm phi = g2::standard_form();
  const auto stab = g2::stabilizer_algebra(phi);
  for (const Matrix& b : stab.basis) {
    REQUIRE(skew_action(b, phi).max_abs_coeff() < 1e-12);
    REQUIRE(is_skew(b, 1e-12));
  }
  REQUIRE(lie::closure_residual(stab) < 1e-10);
}

TEST_CASE("pairing matrix and induced orientation") {
  const AltForm phi = g2::standard_form();
  const Matrix b = g2::b_form(phi);
  REQUIRE((b + 6.0 * Matrix::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-13);
  REQUIRE(g2::induced_orientation(phi) == -1);
  REQUIRE(g2::induced_orientation(-1.0 * phi) == 1);
  REQUIRE_THROWS_AS(g2::induced_orientation(AltForm::basis(7, {1, 2, 3})), std::domain_error);
}

TEST_CASE("genericity classifier") {
  REQUIRE(g2::genericity_check(g2::standard_form()));
  REQUIRE(g2::genericity_check(-1.0 * g2::standard_form()));
  REQUIRE_FALSE(g2::genericity_check(AltForm::basis(7, {1, 2, 3})));
  REQUIRE_FALSE(g2::genericity_check(AltForm(7, 3)));
  Rng rng(52);
  REQUIRE(g2::genericity_check(rotated_phi(rng)));
}

TEST_CASE("frame_d on constant and point-dependent forms") {
  Rng rng(53);
  const s7::SpherePoint x = s7::sample_point(rng);
  const AltForm t = s7::torsion_at(rep(), x);

  // constant 1-form: de_1(e_j, e_k) = T_1jk
  const AltForm de1 = g2::frame_d(AltForm::basis(7, {1}), t);
  REQUIRE(max_abs_diff(de1, interior(frame_vector(7, 1), t)) == 0.0);

  // constant function with zero derivatives
  std::vector<AltForm> zero_derivs(7, AltForm(7, 0));
  REQUIRE(g2::frame_d(AltForm(7, 0), t, &zero_derivs).max_abs_coeff() == 0.0);

  // the torsion itself closes onto (2/3) sigma
  const auto derivs = s7::torsion_coefficient_derivatives(rep(), x);
  REQUIRE(max_abs_diff(g2::frame_d(t, t, &derivs), dT_flat(sigma_contraction(t))) < 1e-12);

  // torsion-free frame: d of a constant form vanishes
  REQUIRE(g2::frame_d(g2::standard_form(), AltForm(7, 3)).max_abs_coeff() == 0.0);

  std::vector<AltForm> bad(3, AltForm(7, 0));
  REQUIRE_THROWS_AS(g2::frame_d(AltForm(7, 0), t, &bad), std::invalid_argument);
}

TEST_CASE("codifferential") {
  Rng rng(54);
  const s7::SpherePoint x = s7::sample_point(rng);
  const AltForm t = s7::torsion_at(rep(), x);

  // the connection torsion is coclosed
  const auto derivs = s7::torsion_coefficient_derivatives(rep(), x);
  REQUIRE(norm(g2::codifferential(t, t, &derivs)) < 1e-12);

  // degree 0 is rejected
  REQUIRE_THROWS_AS(g2::codifferential(AltForm(7, 0), t), std::invalid_argument);

  // constant generic forms have nonzero codifferential at generic points
  REQUIRE(norm(g2::codifferential(g2::standard_form(), t)) > 1e-2);
}

TEST_CASE("theta extraction") {
  Rng rng(55);
  const AltForm phi = g2::standard_form();

  // delta omega = 0 gives theta = 0
  const auto zero = g2::theta_from_delta(phi, AltForm(7, 2));
  REQUIRE(zero.theta.cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(zero.residual == 0.0);

  // round trip through a manufactured right-hand side
  for (int s = 0; s < 20; ++s) {
    const VectorN theta0 = random_unit_vector(7, rng);
    const auto res = g2::theta_from_delta(phi, -1.0 * interior(theta0, phi));
    REQUIRE((res.theta - theta0).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(res.residual < 1e-12);
  }

  // rank-deficient contraction map of a degenerate form
  REQUIRE_THROWS_AS(g2::theta_from_delta(AltForm::basis(7, {1, 2, 3}), AltForm(7, 2)),
                    std::domain_error);
}

TEST_CASE("characteristic torsion reproduces the connection torsion") {
  Rng rng(56);
  for (int s = 0; s < 10; ++s) {
    const s7::SpherePoint x = s7::sample_point(rng);
    const AltForm t = s7::torsion_at(rep(), x);
    const AltForm omega = (s % 2 == 0) ? g2::standard_form() : rotated_phi(rng);
    REQUIRE(max_abs_diff(g2::characteristic_torsion(omega, t), t) < 1e-10);
  }
  // the negatively oriented family works through the same entry point
  const s7::SpherePoint x = s7::sample_point(rng);
  const AltForm t = s7::torsion_at(rep(), x);
  REQUIRE(max_abs_diff(g2::characteristic_torsion(-1.0 * g2::standard_form(), t), t) < 1e-10);
  // degenerate omega propagates the failure
  REQUIRE_THROWS_AS(g2::characteristic_torsion(AltForm::basis(7, {1, 2, 3}), t),
                    std::domain_error);
}

TEST_CASE("characteristic torsion of the flat frame is zero") {
  const AltForm zero_t(7, 3);
  const AltForm tc = g2::characteristic_torsion(g2::standard_form(), zero_t);
  REQUIRE(tc.max_abs_coeff() < 1e-14);
}

TEST_CASE("class residuals") {
  Rng rng(57);
  const AltForm phi = g2::standard_form();

  SECTION("flat control: everything vanishes") {
    const AltForm zero_t(7, 3);
    const auto fg = g2::fg_type_residuals(phi, g2::frame_d(phi, zero_t),
                                          g2::codifferential(phi, zero_t));
    REQUIRE(fg.nearly_parallel == 0.0);
    REQUIRE(fg.cocalibrated == 0.0);
    REQUIRE(fg.conformally_parallel == 0.0);
  }

  SECTION("sphere family is of general type") {
    for (int s = 0; s < 5; ++s) {
      const AltForm t = s7::torsion_at(rep(), s7::sample_point(rng));
      const AltForm omega = (s % 2 == 0) ? phi : rotated_phi(rng);
      const auto fg = g2::fg_type_residuals(omega, g2::frame_d(omega, t),
                                            g2::codifferential(omega, t));
      REQUIRE(fg.nearly_parallel > 0.1);
      REQUIRE(fg.cocalibrated > 0.1);
      REQUIRE(fg.conformally_parallel > 0.1);
    }
  }

  SECTION("manufactured nearly-parallel derivative zeroes exactly one residual") {
    const double lambda = 1.7;
    const auto fg = g2::fg_type_residuals(phi, lambda * hodge(phi), AltForm(7, 2));
    REQUIRE(fg.nearly_parallel < 1e-12);
    REQUIRE(fg.cocalibrated == 0.0);           // empty delta by construction
    REQUIRE(fg.conformally_parallel > 0.1);    // lambda *phi is not theta ^ phi
  }

  SECTION("manufactured conformal derivative zeroes the third residual") {
    Rng local(58);
    const VectorN theta0 = random_unit_vector(7, local);
    AltForm theta_form(7, 1);
    for (int i = 1; i <= 7; ++i) theta_form.add_term({i}, theta0(i - 1));
    const auto fg = g2::fg_type_residuals(phi, wedge(theta_form, phi), AltForm(7, 2));
    REQUIRE(fg.conformally_parallel < 1e-12);
    REQUIRE(fg.nearly_parallel > 0.1);
  }
}

TEST_CASE("nearly-parallel specialization of the torsion formula") {
  // when d omega = tau *omega (star in the induced orientation) and delta = 0,
  // the assembled torsion must be (tau/6) omega; checked against the term sum
  const AltForm phi = g2::standard_form();
  const int o = g2::induced_orientation(phi);
  const double tau = 2.4;
  const AltForm dom = tau * hodge(phi, o);
  AltForm tc = -1.0 * hodge(dom, o);
  tc += inner(dom, hodge(phi, o)) / 6.0 * phi;
  REQUIRE(max_abs_diff(tc, (tau / 6.0) * phi) < 1e-12);
}
