#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/clifford_s7.hpp"
#include "torsionlab/g2.hpp"
#include "torsionlab/lie.hpp"
#include "torsionlab/rng.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/vectorial.hpp"

namespace torsionlab::report {

struct SuiteConfig {
  std::string suite = "all";
  long samples = 100;
  std::uint64_t seed = 42;
  double tol_exact = 1e-10;
  double tol_fd = 1e-6;
  std::string output_path;
  std::string format = "json";
};

/// How a check's measured residual is judged.
enum class Comparison { kAtMost, kAtLeast };

/// Which base the tolerance scales: the configured exact tolerance, the
/// configured finite-difference tolerance, or a fixed absolute threshold.
enum class TolBase { kExact, kFd, kFixed };

struct Check {
  std::string id;
  std::string anchor;  // the identity or bound the check verifies
  Comparison comparison = Comparison::kAtMost;
  TolBase base = TolBase::kExact;
  double scale = 1.0;
  // returns (points tested, measured residual)
  std::function<std::pair<long, double>(const SuiteConfig&, Rng&)> run;

  double tolerance(const SuiteConfig& cfg) const {
    switch (base) {
      case TolBase::kExact: return cfg.tol_exact * scale;
      case TolBase::kFd: return cfg.tol_fd * scale;
      case TolBase::kFixed: return scale;
    }
    return scale;
  }
};

namespace detail {

inline AltForm random_three_form(int n, Rng& rng) {
  AltForm t(n, 3);
  for (const MultiIndex& key : increasing_indices(n, 3)) t.add_term(key, rng.gaussian());
  return t;
}

inline double ricci_vs_round_multiple(const AltForm& t) {
  const Matrix ric = ricci_from_torsion(t);
  const int n = t.dim();
  const double scal = ric.trace();
  return (ric - (scal / n) * Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

inline std::vector<Matrix> interior_generators(const AltForm& t) {
  std::vector<Matrix> gens;
  for (int i = 1; i <= t.dim(); ++i)
    gens.push_back(matrix_of_two_form(interior(frame_vector(t.dim(), i), t)));
  return gens;
}

/// Exhaustive agreement of the two sigma definitions on increasing quadruples.
inline double sigma_consistency_residual(const AltForm& t) {
  const int n = t.dim();
  const AltForm sigma = sigma_contraction(t);
  double worst = 0.0;
  for (const MultiIndex& key : increasing_indices(n, 4)) {
    const double pair = sigma_pairing(t, frame_vector(n, key[0]), frame_vector(n, key[1]),
                                      frame_vector(n, key[2]), frame_vector(n, key[3]));
    worst = std::max(worst, std::abs(pair - sigma.coeff(key)));
  }
  return worst;
}

/// max |T^c - T| over points for one parallel generic form.
inline double characteristic_torsion_deviation(const s7::CliffordRep7& rep, const AltForm& omega,
                                               long points, Rng& rng) {
  double worst = 0.0;
  for (long s = 0; s < points; ++s) {
    const s7::SpherePoint x = s7::sample_point(rng);
    const AltForm t = s7::torsion_at(rep, x);
    worst = std::max(worst, max_abs_diff(g2::characteristic_torsion(omega, t), t));
  }
  return worst;
}

inline AltForm rotated_standard_form(Rng& rng) {
  return transform_form(g2::standard_form(), random_special_orthogonal(7, rng));
}

}  // namespace detail

// ---- check registries, one per suite ----

inline std::vector<Check> liegroup_checks() {
  using detail::random_three_form;
  std::vector<Check> out;

  out.push_back({"catalog-verified", "c totally antisymmetric and Jacobi over {su2, su3, so4, abelian(4)}",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig&, Rng&) {
                   double worst = 0.0;
                   for (const char* name : {"su2", "su3", "so4", "abelian(4)"}) {
                     const auto c = lie::catalog(name);
                     worst = std::max({worst, c.antisymmetry_residual(), c.jacobi_residual()});
                   }
                   return std::pair<long, double>{4, worst};
                 }});

  out.push_back({"frame-curvature-identity", "R(e_i,e_j)e_k = -1/4 [[e_i,e_j],e_k] for su2, su3",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig&, Rng&) {
                   const double w = std::max(lie::frame_curvature_check(lie::catalog("su2")),
                                             lie::frame_curvature_check(lie::catalog("su3")));
                   return std::pair<long, double>{2, w};
                 }});

  out.push_back({"su2-closure-dim-3", "dim Lie{X . T} = 3 for the su2 torsion",
                 Comparison::kAtMost, TolBase::kFixed, 0.5,
                 [](const SuiteConfig&, Rng&) {
                   const AltForm t = lie::torsion_from_structure(lie::catalog("su2"));
                   const auto span = lie::bracket_closure(detail::interior_generators(t), 1e-10);
                   return std::pair<long, double>{1, std::abs(span.dimension() - 3.0)};
                 }});

  out.push_back({"so4-reducible-certificate", "block torsion yields an invariant subspace",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig& cfg, Rng&) {
                   const AltForm t = lie::torsion_from_structure(lie::catalog("so4"));
                   const auto span = lie::bracket_closure(detail::interior_generators(t), 1e-10);
                   const auto res = lie::is_irreducible(span, cfg.seed);
                   if (res.irreducible) return std::pair<long, double>{1, 1.0};
                   return std::pair<long, double>{1, lie::invariance_residual(span, res.invariant_subspace)};
                 }});

  out.push_back({"so4-torsion-splits", "so4 torsion has disjoint index support T = T_1 + T_2",
                 Comparison::kAtMost, TolBase::kFixed, 0.0,
                 [](const SuiteConfig&, Rng&) {
                   const AltForm t = lie::torsion_from_structure(lie::catalog("so4"));
                   double mixed = 0.0;
                   for (const auto& [key, c] : t.terms()) {
                     const bool first = key[0] <= 3, last = key[2] <= 3;
                     if (first != last) mixed = std::max(mixed, std::abs(c));
                   }
                   return std::pair<long, double>{1, mixed};
                 }});

  out.push_back({"jacobi-sigma-equivalence", "jacobi defect = 0 iff sigma_T = 0 (catalog + random forms)",
                 Comparison::kAtMost, TolBase::kFixed, 0.5,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   long points = 0;
                   double mismatches = 0.0;
                   auto judge = [&](const AltForm& t) {
                     ++points;
                     const bool jd = lie::jacobi_defect(t) > 1e-6;
                     const bool sg = norm(sigma_contraction(t)) > 1e-6;
                     if (jd != sg) mismatches = 1.0;
                   };
                   for (const char* name : {"su2", "su3", "so4", "abelian(4)"})
                     judge(lie::torsion_from_structure(lie::catalog(name)));
                   for (long i = 0; i < cfg.samples; ++i)
                     judge(random_three_form(4 + static_cast<int>(i % 3), rng));
                   return std::pair<long, double>{points, mismatches};
                 }});

  out.push_back({"ricci-round-on-simple", "Ric = (Scal/n) Id for simple catalog entries",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig&, Rng&) {
                   const double w = std::max(
                       detail::ricci_vs_round_multiple(lie::torsion_from_structure(lie::catalog("su2"))),
                       detail::ricci_vs_round_multiple(lie::torsion_from_structure(lie::catalog("su3"))));
                   return std::pair<long, double>{2, w};
                 }});

  out.push_back({"ricci-trace-identity", "trace Ric = (3/2) |T|^2 for random forms",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   for (long i = 0; i < cfg.samples; ++i) {
                     const AltForm t = random_three_form(5, rng);
                     worst = std::max(worst, std::abs(ricci_from_torsion(t).trace() - 1.5 * norm2(t)));
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"riemann-symmetries", "curvature from torsion obeys the pair symmetries and first Bianchi",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long i = 0; i < reps; ++i) {
                     const AltForm t = random_three_form(5, rng);
                     const CurvatureTensor r = riemann_from_torsion(t);
                     worst = std::max({worst, r.symmetry_residual(), r.first_bianchi_residual()});
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"ricci-kernel-iff", "Ric(X,X) = 0 exactly when X . T = 0",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig&, Rng& rng) {
                   // torsion supported on e_1..e_4 inside R^5: e_5 spans the kernel
                   AltForm t(5, 3);
                   for (const MultiIndex& key : increasing_indices(4, 3)) t.add_term(key, rng.gaussian());
                   const Matrix ric = ricci_from_torsion(t);
                   const VectorN e5 = frame_vector(5, 5);
                   double worst = std::abs(e5.dot(ric * e5));
                   worst = std::max(worst, norm(interior(e5, t)));
                   // a direction inside the support must have positive Ricci
                   const VectorN e1 = frame_vector(5, 1);
                   if (e1.dot(ric * e1) <= 1e-6 && norm(interior(e1, t)) > 1e-6) worst = 1.0;
                   return std::pair<long, double>{1, worst};
                 }});

  out.push_back({"sigma-consistency-low-dim", "pairing and contraction sigma agree, dims 4..6",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   long points = 0;
                   for (int n = 4; n <= 6; ++n)
                     for (long i = 0; i < std::max(1L, cfg.samples / 20); ++i) {
                       worst = std::max(worst, detail::sigma_consistency_residual(random_three_form(n, rng)));
                       ++points;
                     }
                   return std::pair<long, double>{points, worst};
                 }});

  out.push_back({"bianchi-zero-all-forms", "dT - sigma + nabla T cancels for every 3-form",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   for (long i = 0; i < cfg.samples; ++i)
                     worst = std::max(worst, bianchi_residual(random_three_form(5, rng)).max_abs_coeff());
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"nabla-ratio-law", "nabla T + 2 nabla^g T = 0 for every 3-form",
                 Comparison::kAtMost, TolBase::kFixed, 0.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   for (long i = 0; i < cfg.samples; ++i) {
                     const AltForm t = random_three_form(5, rng);
                     const AltForm sigma = sigma_contraction(t);
                     const VectorN v = random_unit_vector(5, rng);
                     worst = std::max(worst,
                                      max_abs_diff(nabla_T(sigma, v) * 1.0, -2.0 * nabla_g_T(sigma, v)));
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"commutator-catalog", "[X . T, R] = 0 for catalog torsions",
                 Comparison::kAtMost, TolBase::kFixed, 1e-9,
                 [](const SuiteConfig&, Rng& rng) {
                   double worst = 0.0;
                   for (const char* name : {"su2", "su3", "so4"}) {
                     const AltForm t = lie::torsion_from_structure(lie::catalog(name));
                     for (int rep = 0; rep < 4; ++rep)
                       worst = std::max(worst, curvature_commutator_residual(
                                                   t, random_unit_vector(t.dim(), rng)));
                   }
                   return std::pair<long, double>{12, worst};
                 }});

  out.push_back({"commutator-negative-control", "[X . T, R] exceeds threshold for generic 3-forms",
                 Comparison::kAtLeast, TolBase::kFixed, 1e-3,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long i = 0; i < reps; ++i) {
                     const AltForm t = detail::random_three_form(5, rng);
                     least = std::min(least,
                                      curvature_commutator_residual(t, random_unit_vector(5, rng)));
                   }
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"closure-idempotent", "closing a closed span adds nothing",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig&, Rng&) {
                   double worst = 0.0;
                   for (const char* name : {"su2", "so4"}) {
                     const AltForm t = lie::torsion_from_structure(lie::catalog(name));
                     const auto span = lie::bracket_closure(detail::interior_generators(t), 1e-10);
                     const auto re = lie::bracket_closure(span.basis, 1e-10);
                     worst = std::max({worst, std::abs(re.dimension() - span.dimension() + 0.0),
                                       lie::closure_residual(span)});
                   }
                   return std::pair<long, double>{2, worst};
                 }});

  return out;
}

inline std::vector<Check> s7_checks() {
  std::vector<Check> out;

  out.push_back({"clifford-relations", "kappa_i kappa_j + kappa_j kappa_i = -2 delta_ij Id, integer exact",
                 Comparison::kAtMost, TolBase::kFixed, 0.0,
                 [](const SuiteConfig&, Rng&) {
                   const auto rep = s7::build_clifford7();
                   return std::pair<long, double>{49, static_cast<double>(s7::clifford_relation_residual(rep))};
                 }});

  out.push_back({"kappa-trace", "tr(kappa_i kappa_j) = -8 delta_ij, integer exact",
                 Comparison::kAtMost, TolBase::kFixed, 0.0,
                 [](const SuiteConfig&, Rng&) {
                   const auto rep = s7::build_clifford7();
                   int worst = 0;
                   for (int i = 0; i < 7; ++i)
                     for (int j = 0; j < 7; ++j) {
                       const int tr = (rep.kappa_int[static_cast<std::size_t>(i)] *
                                       rep.kappa_int[static_cast<std::size_t>(j)])
                                          .trace();
                       worst = std::max(worst, std::abs(tr + (i == j ? 8 : 0)));
                     }
                   return std::pair<long, double>{49, static_cast<double>(worst)};
                 }});

  out.push_back({"frame-orthonormal", "Gram matrix of the parallel frame is Id, frame tangent",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s) {
                     const auto x = s7::sample_point(rng);
                     const auto frame = s7::killing_frame(rep, x);
                     for (int i = 0; i < 7; ++i) {
                       worst = std::max(worst, std::abs(frame[static_cast<std::size_t>(i)].dot(x.x)));
                       for (int j = 0; j < 7; ++j)
                         worst = std::max(worst, std::abs(frame[static_cast<std::size_t>(i)].dot(
                                                              frame[static_cast<std::size_t>(j)]) -
                                                          (i == j ? 1.0 : 0.0)));
                     }
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"torsion-norm-28", "|T(x)|^2 = 28 at every point",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s)
                     worst = std::max(worst,
                                      std::abs(norm2(s7::torsion_at(rep, s7::sample_point(rng))) - 28.0));
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"scal-42", "Scal = (3/2)|T|^2 = 42 at every point",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s) {
                     const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
                     worst = std::max(worst, std::abs(ricci_from_torsion(t).trace() - 42.0));
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"ricci-6-id", "Ric = 6 Id at every point",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s) {
                     const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
                     worst = std::max(worst, (ricci_from_torsion(t) - 6.0 * Matrix::Identity(7, 7))
                                                 .cwiseAbs()
                                                 .maxCoeff());
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"sectional-curvature-1", "K = 1 on frame pairs and random planes",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s) {
                     const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
                     for (int i = 1; i <= 7; ++i)
                       for (int j = i + 1; j <= 7; ++j)
                         worst = std::max(worst, std::abs(sectional_from_torsion(
                                                              t, frame_vector(7, i), frame_vector(7, j)) -
                                                          1.0));
                     worst = std::max(worst, std::abs(sectional_from_torsion(
                                                          t, random_unit_vector(7, rng),
                                                          random_unit_vector(7, rng)) -
                                                      1.0));
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"sigma-consistency", "pairing and contraction sigma agree on the torsion, dim 7",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s)
                     worst = std::max(worst, detail::sigma_consistency_residual(
                                                 s7::torsion_at(rep, s7::sample_point(rng))));
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"dT-equals-two-thirds-sigma", "3 dT = 2 sigma_T, coefficients differentiated along exact flows",
                 Comparison::kAtMost, TolBase::kFixed, 1e-5,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm t = s7::torsion_at(rep, x);
                     const auto derivs = s7::torsion_coefficient_derivatives_fd(rep, x);
                     const AltForm dt = g2::frame_d(t, t, &derivs);
                     worst = std::max(worst, max_abs_diff(dt, dT_flat(sigma_contraction(t))));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"nabla-T-closed-form", "coefficient derivative equals -1/3 (V . sigma) slot by slot",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm sigma = sigma_contraction(s7::torsion_at(rep, x));
                     const auto derivs = s7::torsion_coefficient_derivatives(rep, x);
                     for (int k = 1; k <= 7; ++k) {
                       const AltForm target = nabla_T(sigma, frame_vector(7, k));
                       worst = std::max(worst,
                                        max_abs_diff(derivs[static_cast<std::size_t>(k - 1)], target));
                     }
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"nabla-g-T-ratio", "nabla^g T = +1/6 (V . sigma) and nabla T = -2 nabla^g T",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (long s = 0; s < reps; ++s) {
                     const AltForm sigma = sigma_contraction(s7::torsion_at(rep, s7::sample_point(rng)));
                     const VectorN v = random_unit_vector(7, rng);
                     worst = std::max(worst, max_abs_diff(nabla_T(sigma, v), -2.0 * nabla_g_T(sigma, v)));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"bianchi-residual", "dT - sigma_T + nabla T = 0 at sample points",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s)
                     worst = std::max(worst, bianchi_residual(s7::torsion_at(rep, s7::sample_point(rng)))
                                                 .max_abs_coeff());
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"torsion-not-parallel", "max coefficient derivative exceeds 0.1 at every point",
                 Comparison::kAtLeast, TolBase::kFixed, 0.1,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double least = std::numeric_limits<double>::max();
                   for (long s = 0; s < cfg.samples; ++s) {
                     const auto derivs =
                         s7::torsion_coefficient_derivatives(rep, s7::sample_point(rng));
                     double here = 0.0;
                     for (const AltForm& d : derivs) here = std::max(here, d.max_abs_coeff());
                     least = std::min(least, here);
                   }
                   return std::pair<long, double>{cfg.samples, least};
                 }});

  out.push_back({"sigma-nonzero", "|sigma_T| stays away from zero on the sphere",
                 Comparison::kAtLeast, TolBase::kFixed, 1e-6,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double least = std::numeric_limits<double>::max();
                   for (long s = 0; s < cfg.samples; ++s)
                     least = std::min(least,
                                      norm(sigma_contraction(s7::torsion_at(rep, s7::sample_point(rng)))));
                   return std::pair<long, double>{cfg.samples, least};
                 }});

  out.push_back({"jacobi-defect-positive", "the torsion bracket violates Jacobi at every point",
                 Comparison::kAtLeast, TolBase::kFixed, 0.1,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (long s = 0; s < reps; ++s)
                     least = std::min(least, lie::jacobi_defect(s7::torsion_at(rep, s7::sample_point(rng))));
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"ghat-so7", "Lie{X . T} closes to the full 21-dimensional algebra, irreducibly",
                 Comparison::kAtMost, TolBase::kFixed, 0.5,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
                   const auto span = lie::bracket_closure(detail::interior_generators(t), 1e-10);
                   double bad = std::abs(span.dimension() - 21.0);
                   if (!lie::is_irreducible(span, cfg.seed).irreducible) bad = std::max(bad, 1.0);
                   return std::pair<long, double>{1, bad};
                 }});

  out.push_back({"commutator-parallel", "[V_i . T, R] = 0 at sample points",
                 Comparison::kAtMost, TolBase::kFixed, 1e-9,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
                     worst = std::max(worst, curvature_commutator_residual(t, random_unit_vector(7, rng)));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"flow-properties", "flow(0) = id, flow(2 pi) = id, d/dt flow = V_k",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s) {
                     const auto x = s7::sample_point(rng);
                     const int k = 1 + static_cast<int>(rng.next_u64() % 7);
                     worst = std::max(worst,
                                      (s7::flow(rep, x, k, 0.0).x - x.x).cwiseAbs().maxCoeff());
                     worst = std::max(worst,
                                      (s7::flow(rep, x, k, 2.0 * M_PI).x - x.x).cwiseAbs().maxCoeff());
                     const double h = 1e-6;
                     const Eigen::Matrix<double, 8, 1> fd =
                         (s7::flow(rep, x, k, h).x - s7::flow(rep, x, k, -h).x) / (2.0 * h);
                     worst = std::max(worst, (fd - rep.kappa[static_cast<std::size_t>(k - 1)] * x.x)
                                                 .cwiseAbs()
                                                 .maxCoeff());
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"levi-civita-frame", "nabla^g_{V_i} V_j = kappa_j kappa_i x and geodesic frame flows",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s)
                     worst = std::max(worst, s7::levi_civita_check(rep, s7::sample_point(rng)));
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"frame-family-stabilizer", "rotations stabilizing T(x) leave the torsion unchanged",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, std::min(cfg.samples / 20, 8L));
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm t = s7::torsion_at(rep, x);
                     const auto stab = g2::stabilizer_algebra(t);
                     Matrix a = Matrix::Zero(7, 7);
                     for (const Matrix& b : stab.basis) a += rng.gaussian() * b;
                     const auto rot = s7::FrameRotation::from(matrix_exp(0.3 * a));
                     worst = std::max(worst, max_abs_diff(s7::frame_family(rep, rot, x), t));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"frame-family-generic-moves", "a generic rotation changes the torsion",
                 Comparison::kAtLeast, TolBase::kFixed, 1e-3,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, std::min(cfg.samples / 20, 8L));
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm t = s7::torsion_at(rep, x);
                     const auto rot = s7::FrameRotation::from(random_special_orthogonal(7, rng));
                     least = std::min(least, max_abs_diff(s7::frame_family(rep, rot, x), t));
                   }
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"forms-antisymmetry", "form evaluation flips by permutation parity",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     const AltForm t = detail::random_three_form(7, rng);
                     std::vector<VectorN> args{random_unit_vector(7, rng), random_unit_vector(7, rng),
                                               random_unit_vector(7, rng)};
                     const double base = t.evaluate(args);
                     std::swap(args[0], args[1]);
                     worst = std::max(worst, std::abs(t.evaluate(args) + base));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"forms-leibniz", "x . (a ^ b) = (x . a) ^ b + (-1)^deg a ^ (x . b)",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     AltForm a(7, 2), b(7, 3);
                     for (const MultiIndex& key : increasing_indices(7, 2)) a.add_term(key, rng.gaussian());
                     for (const MultiIndex& key : increasing_indices(7, 3)) b.add_term(key, rng.gaussian());
                     const VectorN x = random_unit_vector(7, rng);
                     const AltForm lhs = interior(x, wedge(a, b));
                     const AltForm rhs = wedge(interior(x, a), b) + wedge(a, interior(x, b));
                     worst = std::max(worst, max_abs_diff(lhs, rhs));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"hodge-involution", "** = (-1)^{k(n-k)} in dims up to 8",
                 Comparison::kAtMost, TolBase::kFixed, 1e-13,
                 [](const SuiteConfig&, Rng& rng) {
                   double worst = 0.0;
                   long points = 0;
                   for (int n = 2; n <= 8; ++n)
                     for (int k = 0; k <= n; ++k) {
                       AltForm a(n, k);
                       for (const MultiIndex& key : increasing_indices(n, k))
                         a.add_term(key, rng.gaussian());
                       const double sg = (k * (n - k)) % 2 == 0 ? 1.0 : -1.0;
                       worst = std::max(worst, max_abs_diff(hodge(hodge(a)), sg * a));
                       ++points;
                     }
                   return std::pair<long, double>{points, worst};
                 }});

  return out;
}

inline std::vector<Check> g2_checks() {
  std::vector<Check> out;

  out.push_back({"stabilizer-dim-14", "generic parallel 3-forms have a 14-dimensional stabilizer",
                 Comparison::kAtMost, TolBase::kFixed, 0.5,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   double bad = std::abs(g2::stabilizer_algebra(g2::standard_form()).dimension() - 14.0);
                   const long reps = std::max(1L, std::min(cfg.samples / 20, 6L));
                   for (long s = 0; s < reps; ++s)
                     bad = std::max(bad, std::abs(g2::stabilizer_algebra(detail::rotated_standard_form(rng))
                                                      .dimension() -
                                                  14.0));
                   return std::pair<long, double>{reps + 1, bad};
                 }});

  out.push_back({"stabilizer-annihilates", "the stabilizer basis kills omega and closes under brackets",
                 Comparison::kAtMost, TolBase::kFixed, 1e-10,
                 [](const SuiteConfig&, Rng&) {
                   const AltForm phi = g2::standard_form();
                   const auto stab = g2::stabilizer_algebra(phi);
                   double worst = lie::closure_residual(stab);
                   for (const Matrix& b : stab.basis)
                     worst = std::max(worst, skew_action(b, phi).max_abs_coeff());
                   return std::pair<long, double>{1, worst};
                 }});

  out.push_back({"genericity-classifier", "standard form generic (both orientations), decomposable form not",
                 Comparison::kAtMost, TolBase::kFixed, 0.0,
                 [](const SuiteConfig&, Rng&) {
                   double bad = 0.0;
                   if (!g2::genericity_check(g2::standard_form())) bad = 1.0;
                   if (!g2::genericity_check(-1.0 * g2::standard_form())) bad = 1.0;
                   if (g2::genericity_check(AltForm::basis(7, {1, 2, 3}))) bad = 1.0;
                   if (g2::induced_orientation(g2::standard_form()) != -1) bad = 1.0;
                   if (g2::induced_orientation(-1.0 * g2::standard_form()) != 1) bad = 1.0;
                   return std::pair<long, double>{5, bad};
                 }});

  out.push_back({"frame-d-structural", "d e_i = e_i . T and frame_d(T) = (2/3) sigma_T",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm t = s7::torsion_at(rep, x);
                     const AltForm de1 = g2::frame_d(AltForm::basis(7, {1}), t);
                     worst = std::max(worst, max_abs_diff(de1, interior(frame_vector(7, 1), t)));
                     const auto derivs = s7::torsion_coefficient_derivatives(rep, x);
                     worst = std::max(worst, max_abs_diff(g2::frame_d(t, t, &derivs),
                                                          dT_flat(sigma_contraction(t))));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"torsion-coclosed", "delta T = 0 pointwise",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm t = s7::torsion_at(rep, x);
                     const auto derivs = s7::torsion_coefficient_derivatives(rep, x);
                     worst = std::max(worst, norm(g2::codifferential(t, t, &derivs)));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"delta-squared-zero", "delta(delta omega) vanishes (coefficients differentiated along flows)",
                 Comparison::kAtMost, TolBase::kFixed, 1e-5,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   const AltForm omega = g2::standard_form();
                   double worst = 0.0;
                   const long reps = std::max(1L, std::min(cfg.samples / 20, 6L));
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     auto delta_omega_at = [&](const s7::SpherePoint& y) {
                       return g2::codifferential(omega, s7::torsion_at(rep, y));
                     };
                     const AltForm d0 = delta_omega_at(x);
                     std::vector<AltForm> derivs;
                     const double h = 1e-5;
                     for (int k = 1; k <= 7; ++k)
                       derivs.push_back(1.0 / (2.0 * h) *
                                        (delta_omega_at(s7::flow(rep, x, k, h)) -
                                         delta_omega_at(s7::flow(rep, x, k, -h))));
                     worst = std::max(worst,
                                      norm(g2::codifferential(d0, s7::torsion_at(rep, x), &derivs)));
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"theta-roundtrip", "theta recovered from a manufactured -(theta . omega)",
                 Comparison::kAtMost, TolBase::kExact, 1.0,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const AltForm phi = g2::standard_form();
                   double worst = 0.0;
                   for (long s = 0; s < cfg.samples; ++s) {
                     const VectorN theta0 = random_unit_vector(7, rng);
                     const AltForm delta = -1.0 * interior(theta0, phi);
                     const auto res = g2::theta_from_delta(phi, delta);
                     worst = std::max(worst, (res.theta - theta0).cwiseAbs().maxCoeff());
                     worst = std::max(worst, res.residual);
                   }
                   return std::pair<long, double>{cfg.samples, worst};
                 }});

  out.push_back({"characteristic-torsion-matches", "T^c assembled from omega equals the connection torsion",
                 Comparison::kAtMost, TolBase::kFixed, 1e-6,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   const long points = std::max(1L, cfg.samples / 5);
                   double worst =
                       detail::characteristic_torsion_deviation(rep, g2::standard_form(), points, rng);
                   for (int family = 0; family < 4; ++family)
                     worst = std::max(worst, detail::characteristic_torsion_deviation(
                                                 rep, detail::rotated_standard_form(rng), points, rng));
                   return std::pair<long, double>{5 * points, worst};
                 }});

  // per structure: a pure-class form would zero the matching residual at
  // every point, so the exclusion asks each residual to exceed the threshold
  // somewhere on the sampled set (isolated aligned points do zero two of them)
  out.push_back({"fg-residuals-general-type", "each class residual exceeds 0.1 somewhere, per form",
                 Comparison::kAtLeast, TolBase::kFixed, 0.1,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   double least = std::numeric_limits<double>::max();
                   const long forms = 4;
                   const long pts = std::max(1L, cfg.samples / 10);
                   for (long f = 0; f < forms; ++f) {
                     const AltForm omega =
                         (f == 0) ? g2::standard_form() : detail::rotated_standard_form(rng);
                     double np = 0.0, cc = 0.0, lcp = 0.0;
                     for (long s = 0; s < pts; ++s) {
                       const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
                       const auto fg = g2::fg_type_residuals(omega, g2::frame_d(omega, t),
                                                             g2::codifferential(omega, t));
                       np = std::max(np, fg.nearly_parallel);
                       cc = std::max(cc, fg.cocalibrated);
                       lcp = std::max(lcp, fg.conformally_parallel);
                     }
                     least = std::min({least, np, cc, lcp});
                   }
                   return std::pair<long, double>{forms * pts, least};
                 }});

  out.push_back({"fg-flat-control", "constant form over a torsion-free frame has all residuals zero",
                 Comparison::kAtMost, TolBase::kFixed, 1e-12,
                 [](const SuiteConfig&, Rng&) {
                   const AltForm omega = g2::standard_form();
                   const AltForm zero_t(7, 3);
                   const AltForm dom = g2::frame_d(omega, zero_t);
                   const AltForm delom = g2::codifferential(omega, zero_t);
                   const auto fg = g2::fg_type_residuals(omega, dom, delom);
                   const double worst =
                       std::max({fg.nearly_parallel, fg.cocalibrated, fg.conformally_parallel});
                   return std::pair<long, double>{1, worst};
                 }});

  out.push_back({"fg-nearly-parallel-roundtrip", "manufactured d omega = lambda *omega zeroes that residual only",
                 Comparison::kAtMost, TolBase::kFixed, 1e-10,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const AltForm omega = g2::standard_form();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (long s = 0; s < reps; ++s) {
                     const double lambda = 1.0 + rng.gaussian();
                     const AltForm dom = lambda * hodge(omega);
                     const auto fg = g2::fg_type_residuals(omega, dom, AltForm(7, 2));
                     worst = std::max(worst, fg.nearly_parallel);
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"fg-stabilizer-invariance", "residuals unchanged under rotations stabilizing omega",
                 Comparison::kAtMost, TolBase::kFixed, 1e-8,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   const auto rep = s7::build_clifford7();
                   const AltForm omega = g2::standard_form();
                   const auto stab = g2::stabilizer_algebra(omega);
                   double worst = 0.0;
                   const long reps = std::max(1L, std::min(cfg.samples / 20, 6L));
                   for (long s = 0; s < reps; ++s) {
                     const auto x = s7::sample_point(rng);
                     const AltForm t = s7::torsion_at(rep, x);
                     Matrix a = Matrix::Zero(7, 7);
                     for (const Matrix& b : stab.basis) a += rng.gaussian() * b;
                     const AltForm t_rot = transform_form(t, matrix_exp(0.3 * a));
                     const auto fg0 = g2::fg_type_residuals(omega, g2::frame_d(omega, t),
                                                            g2::codifferential(omega, t));
                     const auto fg1 = g2::fg_type_residuals(omega, g2::frame_d(omega, t_rot),
                                                            g2::codifferential(omega, t_rot));
                     worst = std::max({worst, std::abs(fg0.nearly_parallel - fg1.nearly_parallel),
                                       std::abs(fg0.cocalibrated - fg1.cocalibrated),
                                       std::abs(fg0.conformally_parallel - fg1.conformally_parallel)});
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  return out;
}

inline std::vector<Check> vectorial_checks() {
  using namespace torsionlab::vectorial;
  std::vector<Check> out;

  auto interior_points = [](const MetricPatch& patch, long count, Rng& rng) {
    std::vector<VectorN> pts;
    for (long i = 0; i < count; ++i) {
      VectorN p(patch.dim);
      for (int d = 0; d < patch.dim; ++d) {
        const double lo = patch.domain.lo(d), hi = patch.domain.hi(d);
        const double margin = 0.1 * (hi - lo);
        p(d) = lo + margin + (hi - lo - 2 * margin) * rng.uniform();
      }
      pts.push_back(std::move(p));
    }
    return pts;
  };

  out.push_back({"christoffel-closed-forms", "half-plane and polar-sphere symbols match closed forms",
                 Comparison::kAtMost, TolBase::kFd, 1.0,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto hp = half_plane_patch();
                   const auto sp = sphere_polar_patch();
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (const VectorN& p : interior_points(hp, reps, rng)) {
                     const auto gam = christoffels(hp, p);
                     const double y = p(1);
                     worst = std::max({worst, std::abs(gam[0](0, 1) + 1.0 / y),
                                       std::abs(gam[1](0, 0) - 1.0 / y),
                                       std::abs(gam[1](1, 1) + 1.0 / y)});
                   }
                   for (const VectorN& p : interior_points(sp, reps, rng)) {
                     const auto gam = christoffels(sp, p);
                     const double th = p(0);
                     worst = std::max({worst, std::abs(gam[0](1, 1) + std::sin(th) * std::cos(th)),
                                       std::abs(gam[1](0, 1) - std::cos(th) / std::sin(th))});
                   }
                   return std::pair<long, double>{2 * reps, worst};
                 }});

  out.push_back({"curvature-formula-flat", "flat-connection curvature formula on the hyperbolic fixture",
                 Comparison::kAtMost, TolBase::kFixed, 1e-5,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto hp = half_plane_patch();
                   const auto v = vertical_scaling_field(-1.0);
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (const VectorN& p : interior_points(hp, reps, rng))
                     worst = std::max(worst, vectorial_curvature_residual(hp, v, p));
                   for (const VectorN& p : interior_points(euclidean_patch(2), 2, rng))
                     worst = std::max(worst, vectorial_curvature_residual(euclidean_patch(2),
                                                                          zero_field(2), p));
                   return std::pair<long, double>{reps + 2, worst};
                 }});

  out.push_back({"curvature-formula-negative", "round-sphere control fails the formula by a margin",
                 Comparison::kAtLeast, TolBase::kFixed, 0.5,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto sp = sphere_polar_patch();
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (const VectorN& p : interior_points(sp, reps, rng))
                     least = std::min(least, vectorial_curvature_residual(sp, zero_field(2), p));
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"flatness-positive", "dV = 0 and R = 0 for the flat hyperbolic field",
                 Comparison::kAtMost, TolBase::kFixed, 1e-4,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto hp = half_plane_patch();
                   const auto v = vertical_scaling_field(-1.0);
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (const VectorN& p : interior_points(hp, reps, rng))
                     worst = std::max(worst, flatness_defect(hp, v, p));
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"flatness-negative", "the same field on the euclidean patch is not flat",
                 Comparison::kAtLeast, TolBase::kFixed, 0.5,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto eu = euclidean_patch(2);
                   MetricPatch shifted = eu;  // keep y positive so y d/dy is smooth
                   shifted.domain.lo = VectorN::Constant(2, 0.5);
                   shifted.domain.hi = VectorN::Constant(2, 2.0);
                   const auto v = vertical_scaling_field(1.0);
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (const VectorN& p : interior_points(shifted, reps, rng))
                     least = std::min(least, flatness_defect(shifted, v, p));
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"parallel-field", "nabla V = 0 on the hyperbolic fixture predicts K = -|V|^2",
                 Comparison::kAtMost, TolBase::kFixed, 1e-4,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto hp = half_plane_patch();
                   const auto v = vertical_scaling_field(-1.0);
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (const VectorN& p : interior_points(hp, reps, rng)) {
                     const auto pc = parallel_V_check(hp, v, p);
                     worst = std::max({worst, pc.defect,
                                       std::abs(fd_sectional_curvature(hp, p, 0, 1) -
                                                pc.predicted_curvature)});
                   }
                   return std::pair<long, double>{reps, worst};
                 }});

  out.push_back({"parallel-field-sign-control", "the mirrored field is far from parallel",
                 Comparison::kAtLeast, TolBase::kFixed, 1.0,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   MetricPatch hp = half_plane_patch();
                   hp.domain.hi(1) = 1.8;  // the defect of +y d/dy is 2/y
                   const auto v = vertical_scaling_field(1.0);
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (const VectorN& p : interior_points(hp, reps, rng))
                     least = std::min(least, parallel_V_check(hp, v, p).defect);
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"gauss-divergence-flat", "G = div(V) on the flat fixtures",
                 Comparison::kAtMost, TolBase::kFixed, 1e-5,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto hp = half_plane_patch();
                   const auto v = vertical_scaling_field(-1.0);
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 5);
                   for (const VectorN& p : interior_points(hp, reps, rng))
                     worst = std::max(worst, gauss_divergence_criterion(hp, v, p));
                   for (const VectorN& p : interior_points(flat_torus_patch(), 2, rng))
                     worst = std::max(worst,
                                      gauss_divergence_criterion(flat_torus_patch(), zero_field(2), p));
                   return std::pair<long, double>{reps + 2, worst};
                 }});

  out.push_back({"gauss-divergence-negative", "round-sphere control misses by |G| = 1",
                 Comparison::kAtLeast, TolBase::kFixed, 0.5,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   const auto sp = sphere_polar_patch();
                   double least = std::numeric_limits<double>::max();
                   const long reps = std::max(1L, cfg.samples / 10);
                   for (const VectorN& p : interior_points(sp, reps, rng))
                     least = std::min(least, gauss_divergence_criterion(sp, zero_field(2), p));
                   return std::pair<long, double>{reps, least};
                 }});

  out.push_back({"weyl-identity", "R^nabla = R^w + dV Id on every fixture",
                 Comparison::kAtMost, TolBase::kFixed, 1e-4,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   const auto hp = half_plane_patch();
                   for (const VectorN& p : interior_points(hp, reps, rng)) {
                     worst = std::max(worst,
                                      weyl_relation_residual(hp, vertical_scaling_field(-1.0), p));
                     worst = std::max(worst, weyl_relation_residual(hp, zero_field(2), p));
                   }
                   const auto eu = euclidean_patch(2);
                   const auto vr = random_smooth_field(2, 1234);
                   for (const VectorN& p : interior_points(eu, reps, rng))
                     worst = std::max(worst, weyl_relation_residual(eu, vr, p));
                   return std::pair<long, double>{3 * reps, worst};
                 }});

  out.push_back({"dv-symmetry-equivalence", "dV = 0 iff the covariant derivative of V is symmetric",
                 Comparison::kAtMost, TolBase::kFixed, 1e-4,
                 [interior_points](const SuiteConfig& cfg, Rng& rng) {
                   double worst = 0.0;
                   const long reps = std::max(1L, cfg.samples / 10);
                   const auto eu = euclidean_patch(2);
                   for (long s = 0; s < 3; ++s) {
                     const auto vr = random_smooth_field(2, 100 + static_cast<std::uint64_t>(s));
                     for (const VectorN& p : interior_points(eu, reps, rng))
                       worst = std::max(worst, dv_symmetry_residual(eu, vr, p));
                   }
                   return std::pair<long, double>{3 * reps, worst};
                 }});

  return out;
}

inline std::vector<Check> suite_checks(const std::string& suite) {
  if (suite == "liegroup") return liegroup_checks();
  if (suite == "s7") return s7_checks();
  if (suite == "g2") return g2_checks();
  if (suite == "vectorial") return vectorial_checks();
  if (suite == "all") {
    std::vector<Check> all;
    for (const char* name : {"liegroup", "s7", "g2", "vectorial"}) {
      auto part = suite_checks(name);
      for (auto& c : part) {
        c.id = std::string(name) + "/" + c.id;
        all.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace torsionlab::report
