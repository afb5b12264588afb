#include <catch2/catch_amalgamated.hpp>

#include "torsionlab/vectorial.hpp"

using namespace torsionlab;
using namespace torsionlab::vectorial;

namespace {

VectorN pt(double a, double b) {
  VectorN p(2);
  p << a, b;
  return p;
}

}  // namespace

TEST_CASE("patch validation") {
  REQUIRE(half_plane_patch().validate() > 0.0);
  REQUIRE(sphere_polar_patch().validate() > 0.0);
  REQUIRE(euclidean_patch(2).validate() == 1.0);

  MetricPatch bad = euclidean_patch(2);
  bad.metric = [](const VectorN&) {
    Matrix g(2, 2);
    g << 1.0, 2.0, 2.0, 1.0;  // indefinite
    return g;
  };
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);

  MetricPatch coarse = euclidean_patch(2);
  coarse.fd_step = 0.5;
  REQUIRE_THROWS_AS(coarse.validate(), std::invalid_argument);
}

TEST_CASE("christoffel closed forms") {
  const auto eu = euclidean_patch(2);
  const auto gam0 = christoffels(eu, pt(0.2, -0.1));
  REQUIRE(gam0[0].cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE(gam0[1].cwiseAbs().maxCoeff() < 1e-12);

  const auto hp = half_plane_patch();
  const VectorN q = pt(0.4, 1.3);
  const auto gam = christoffels(hp, q);
  const double y = q(1);
  REQUIRE(std::abs(gam[0](0, 1) + 1.0 / y) < 1e-7);
  REQUIRE(std::abs(gam[0](1, 0) + 1.0 / y) < 1e-7);
  REQUIRE(std::abs(gam[1](0, 0) - 1.0 / y) < 1e-7);
  REQUIRE(std::abs(gam[1](1, 1) + 1.0 / y) < 1e-7);

  const auto sp = sphere_polar_patch();
  const VectorN qs = pt(1.0, 0.2);
  const auto gs = christoffels(sp, qs);
  REQUIRE(std::abs(gs[0](1, 1) + std::sin(1.0) * std::cos(1.0)) < 1e-7);
  REQUIRE(std::abs(gs[1](0, 1) - std::cos(1.0) / std::sin(1.0)) < 1e-7);

  // symmetric in the lower indices
  for (int i = 0; i < 2; ++i)
    REQUIRE((gs[i] - gs[i].transpose()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("stencil guard near the boundary") {
  const auto hp = half_plane_patch();
  REQUIRE_THROWS_AS(christoffels(hp, pt(0.0, 0.5)), StencilError);
  REQUIRE_THROWS_AS(flatness_defect(hp, zero_field(2), pt(0.0, 0.50005)), StencilError);
  REQUIRE_THROWS_AS(gauss_divergence_criterion(hp, zero_field(2), pt(-2.0, 1.0)), StencilError);
}

TEST_CASE("flat vectorial connection on the hyperbolic fixture") {
  const auto hp = half_plane_patch();
  const auto flat = vertical_scaling_field(-1.0);
  for (const VectorN& q : {pt(0.3, 1.2), pt(-1.0, 0.8), pt(1.4, 2.3)}) {
    REQUIRE(flatness_defect(hp, flat, q) < 1e-5);
    REQUIRE(vectorial_curvature_residual(hp, flat, q) < 1e-6);
    REQUIRE(gauss_divergence_criterion(hp, flat, q) < 1e-6);
    const auto pc = parallel_V_check(hp, flat, q);
    REQUIRE(pc.defect < 1e-7);
    REQUIRE(std::abs(pc.predicted_curvature + 1.0) < 1e-12);
    REQUIRE(std::abs(fd_sectional_curvature(hp, q, 0, 1) - pc.predicted_curvature) < 1e-5);
  }
}

TEST_CASE("sign of the field matters") {
  const auto hp = half_plane_patch();
  const auto mirrored = vertical_scaling_field(1.0);
  const VectorN q = pt(0.3, 1.2);
  REQUIRE(parallel_V_check(hp, mirrored, q).defect > 1.0);
  REQUIRE(flatness_defect(hp, mirrored, q) > 0.5);
  REQUIRE(gauss_divergence_criterion(hp, mirrored, q) > 0.5);
}

TEST_CASE("euclidean trivial cases") {
  const auto eu = euclidean_patch(2);
  const VectorN q = pt(0.1, -0.3);
  REQUIRE(vectorial_curvature_residual(eu, zero_field(2), q) < 1e-12);
  REQUIRE(flatness_defect(eu, zero_field(2), q) < 1e-12);
  const auto pc = parallel_V_check(eu, zero_field(2), q);
  REQUIRE(pc.defect == 0.0);
  REQUIRE(pc.predicted_curvature == 0.0);
  REQUIRE(gauss_divergence_criterion(flat_torus_patch(), zero_field(2),
                                     pt(3.0, 3.0)) < 1e-10);
}

TEST_CASE("vertical field on a flat patch is a negative control") {
  MetricPatch strip = euclidean_patch(2);
  strip.domain.lo = VectorN::Constant(2, 0.5);
  strip.domain.hi = VectorN::Constant(2, 2.0);
  const VectorN q = pt(1.0, 1.0);
  REQUIRE(flatness_defect(strip, vertical_scaling_field(1.0), q) > 0.5);
}

TEST_CASE("round sphere negative controls") {
  const auto sp = sphere_polar_patch();
  const VectorN q = pt(1.2, 0.1);
  REQUIRE(gauss_divergence_criterion(sp, zero_field(2), q) > 0.5);
  REQUIRE(vectorial_curvature_residual(sp, zero_field(2), q) > 0.5);
  REQUIRE(flatness_defect(sp, zero_field(2), q) > 0.5);
  REQUIRE(std::abs(fd_sectional_curvature(sp, q, 0, 1) - 1.0) < 1e-6);
}

TEST_CASE("weyl relation is an identity") {
  const auto hp = half_plane_patch();
  const auto eu = euclidean_patch(2);
  const auto vr = random_smooth_field(2, 321);
  REQUIRE(weyl_relation_residual(hp, vertical_scaling_field(-1.0), pt(0.5, 1.5)) < 1e-4);
  REQUIRE(weyl_relation_residual(hp, vertical_scaling_field(1.0), pt(0.5, 1.5)) < 1e-4);
  REQUIRE(weyl_relation_residual(hp, zero_field(2), pt(-0.5, 2.0)) < 1e-4);
  REQUIRE(weyl_relation_residual(eu, vr, pt(0.2, 0.4)) < 1e-4);
  REQUIRE(weyl_relation_residual(sphere_polar_patch(), vr, pt(1.3, -0.2)) < 1e-4);
}

TEST_CASE("closedness of the dual form matches covariant symmetry") {
  const auto eu = euclidean_patch(2);
  const auto hp = half_plane_patch();
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    const auto vr = random_smooth_field(2, seed);
    REQUIRE(dv_symmetry_residual(eu, vr, pt(0.3, -0.4)) < 1e-4);
    REQUIRE(dv_symmetry_residual(hp, vr, pt(0.3, 1.4)) < 1e-4);
  }
  // closed example: V^flat = -dy/y on the half plane
  REQUIRE(detail::dv_two_form(hp, vertical_scaling_field(-1.0), pt(0.0, 1.0))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("dimension guard") {
  REQUIRE_THROWS_AS(gauss_divergence_criterion(euclidean_patch(3), zero_field(3),
                                               VectorN::Zero(3)),
                    std::invalid_argument);
}
