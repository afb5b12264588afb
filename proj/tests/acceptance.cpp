// Acceptance suite: end-to-end criteria with pinned tolerances, one pass/fail
// line each. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "torsionlab/clifford_s7.hpp"
#include "torsionlab/g2.hpp"
#include "torsionlab/lie.hpp"
#include "torsionlab/report.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/vectorial.hpp"

using namespace torsionlab;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
  double time_limit_s = 0.0;  // 0 = unlimited
};

int g_failures = 0;

void run_criterion(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::pair<bool, std::string> result;
  try {
    result = c.run();
  } catch (const std::exception& e) {
    result = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = result.first;
  std::string detail = result.second;
  if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
    pass = false;
    detail += " [time limit exceeded]";
  }
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %d %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.number,
              c.name.c_str(), detail.c_str(), elapsed);
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

AltForm random_three_form(int n, Rng& rng) {
  AltForm t(n, 3);
  for (const MultiIndex& key : increasing_indices(n, 3)) t.add_term(key, rng.gaussian());
  return t;
}

std::vector<Matrix> interior_generators(const AltForm& t) {
  std::vector<Matrix> gens;
  for (int i = 1; i <= t.dim(); ++i)
    gens.push_back(matrix_of_two_form(interior(frame_vector(t.dim(), i), t)));
  return gens;
}

// ---- criterion 1: exact Clifford relations ----
std::pair<bool, std::string> clifford_exact() {
  const auto rep = s7::build_clifford7();
  const int residual = s7::clifford_relation_residual(rep);
  return {residual == 0, "integer residual " + std::to_string(residual) + " over 49 pairs"};
}

// ---- criterion 2: pointwise sphere invariants at 1000 seeded points ----
std::pair<bool, std::string> sphere_invariants() {
  const auto rep = s7::build_clifford7();
  Rng rng(2024);
  const double tol = 1e-10;
  double worst = 0.0;
  const long points = 1000;
  for (long s = 0; s < points; ++s) {
    const auto x = s7::sample_point(rng);
    const AltForm t = s7::torsion_at(rep, x);
    worst = std::max(worst, std::abs(norm2(t) - 28.0));
    const Matrix ric = ricci_from_torsion(t);
    worst = std::max(worst, std::abs(ric.trace() - 42.0));
    worst = std::max(worst, (ric - 6.0 * Matrix::Identity(7, 7)).cwiseAbs().maxCoeff());
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        worst = std::max(worst, std::abs(sectional_from_torsion(t, frame_vector(7, i),
                                                                frame_vector(7, j)) -
                                         1.0));
  }
  return {worst <= tol,
          "|T|^2=28, Scal=42, Ric=6Id, K=1 at 1000 points, max dev " + fmt(worst) + " (tol 1e-10)"};
}

// ---- criterion 3: the derivative identity web ----
std::pair<bool, std::string> derivative_identities() {
  const auto rep = s7::build_clifford7();
  Rng rng(2025);
  double worst_fd = 0.0, worst_exact = 0.0;
  const long points = 100;
  for (long s = 0; s < points; ++s) {
    const auto x = s7::sample_point(rng);
    const AltForm t = s7::torsion_at(rep, x);
    const AltForm sigma = sigma_contraction(t);
    // dT by finite differences along the exact flows vs (2/3) sigma
    const auto fd = s7::torsion_coefficient_derivatives_fd(rep, x);
    worst_fd = std::max(worst_fd, max_abs_diff(g2::frame_d(t, t, &fd), dT_flat(sigma)));
    // closed-form coefficient derivative vs -1/3 (V . sigma) and +1/6 (V . sigma)
    const auto closed = s7::torsion_coefficient_derivatives(rep, x);
    for (int k = 1; k <= 7; ++k) {
      const AltForm& d = closed[static_cast<std::size_t>(k - 1)];
      worst_exact = std::max(worst_exact, max_abs_diff(d, nabla_T(sigma, frame_vector(7, k))));
      worst_exact = std::max(
          worst_exact, max_abs_diff(d, -2.0 * nabla_g_T(sigma, frame_vector(7, k))));
    }
    worst_exact = std::max(worst_exact, bianchi_residual(t).max_abs_coeff());
  }
  const bool pass = worst_fd <= 1e-5 && worst_exact <= 1e-10;
  return {pass, "dT vs (2/3)sigma (fd) " + fmt(worst_fd) + " (tol 1e-5); nabla/Bianchi " +
                    fmt(worst_exact) + " (tol 1e-10)"};
}

// ---- criterion 4: sigma consistency, exhaustive dims 4..7 ----
std::pair<bool, std::string> sigma_consistency() {
  Rng rng(2026);
  double worst = 0.0;
  for (int n = 4; n <= 7; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const AltForm t = random_three_form(n, rng);
      const AltForm sigma = sigma_contraction(t);
      for (const MultiIndex& key : increasing_indices(n, 4)) {
        const double pair =
            sigma_pairing(t, frame_vector(n, key[0]), frame_vector(n, key[1]),
                          frame_vector(n, key[2]), frame_vector(n, key[3]));
        worst = std::max(worst, std::abs(pair - sigma.coeff(key)));
      }
    }
  }
  return {worst <= 1e-12, "contraction vs pairing, dims 4-7 exhaustive, max dev " + fmt(worst) +
                              " (tol 1e-12)"};
}

// ---- criterion 5: the closure dichotomy instances ----
std::pair<bool, std::string> lie_dichotomy() {
  Rng rng(2027);
  std::ostringstream detail;
  bool pass = true;

  // jacobi defect = 0 iff sigma = 0, catalog + 100 random forms
  long mismatches = 0;
  auto judge = [&](const AltForm& t) {
    const double jd = lie::jacobi_defect(t);
    const double sg = norm(sigma_contraction(t));
    const bool both_zero = jd <= 1e-6 && sg <= 1e-6;
    const bool both_big = jd > 1e-6 && sg > 1e-6;
    if (!both_zero && !both_big) ++mismatches;
  };
  for (const char* name : {"su2", "su3", "so4", "abelian(4)"})
    judge(lie::torsion_from_structure(lie::catalog(name)));
  for (int i = 0; i < 100; ++i) judge(random_three_form(4 + (i % 4), rng));
  pass = pass && mismatches == 0;
  detail << "jacobi<->sigma mismatches " << mismatches << "/104";

  const auto su2_span = lie::bracket_closure(
      interior_generators(lie::torsion_from_structure(lie::catalog("su2"))), 1e-10);
  pass = pass && su2_span.dimension() == 3;
  detail << "; dim(su2)=" << su2_span.dimension();

  const auto so4_span = lie::bracket_closure(
      interior_generators(lie::torsion_from_structure(lie::catalog("so4"))), 1e-10);
  const auto so4_irr = lie::is_irreducible(so4_span, 2027);
  pass = pass && !so4_irr.irreducible && so4_irr.invariant_subspace.cols() > 0 &&
         lie::invariance_residual(so4_span, so4_irr.invariant_subspace) < 1e-9;
  detail << "; so4 reducible cert " << (so4_irr.irreducible ? "missing" : "found");

  const auto rep = s7::build_clifford7();
  const AltForm t7 = s7::torsion_at(rep, s7::sample_point(rng));
  const auto s7_span = lie::bracket_closure(interior_generators(t7), 1e-10);
  const auto s7_irr = lie::is_irreducible(s7_span, 2027);
  pass = pass && s7_span.dimension() == 21 && s7_irr.irreducible;
  detail << "; dim(sphere)=" << s7_span.dimension()
         << (s7_irr.irreducible ? " irreducible" : " reducible");
  return {pass, detail.str()};
}

// ---- criterion 6: curvature theorems and the negative control ----
std::pair<bool, std::string> curvature_theorems() {
  Rng rng(2028);
  double frame_worst = std::max(lie::frame_curvature_check(lie::catalog("su2")),
                                lie::frame_curvature_check(lie::catalog("su3")));
  double comm_worst = 0.0;
  for (const char* name : {"su2", "su3", "so4"}) {
    const AltForm t = lie::torsion_from_structure(lie::catalog(name));
    for (int s = 0; s < 8; ++s)
      comm_worst =
          std::max(comm_worst, curvature_commutator_residual(t, random_unit_vector(t.dim(), rng)));
  }
  const auto rep = s7::build_clifford7();
  for (int s = 0; s < 25; ++s) {
    const AltForm t = s7::torsion_at(rep, s7::sample_point(rng));
    comm_worst =
        std::max(comm_worst, curvature_commutator_residual(t, random_unit_vector(7, rng)));
  }
  double control_least = 1e300;
  for (int s = 0; s < 25; ++s)
    control_least = std::min(control_least, curvature_commutator_residual(
                                                random_three_form(5, rng),
                                                random_unit_vector(5, rng)));
  const bool pass = frame_worst < 1e-10 && comm_worst < 1e-9 && control_least > 1e-3;
  return {pass, "frame identity " + fmt(frame_worst) + " (tol 1e-10); commutator " +
                    fmt(comm_worst) + " (tol 1e-9); negative control min " + fmt(control_least) +
                    " (> 1e-3)"};
}

// ---- criterion 7: the characteristic-torsion integration test ----
std::pair<bool, std::string> characteristic_torsion_family() {
  const auto rep = s7::build_clifford7();
  Rng rng(2029);
  std::vector<AltForm> family{g2::standard_form()};
  for (int i = 0; i < 20; ++i)
    family.push_back(transform_form(g2::standard_form(), random_special_orthogonal(7, rng)));

  double tc_worst = 0.0;
  long stab_bad = 0;
  std::vector<s7::SpherePoint> points;
  for (int s = 0; s < 100; ++s) points.push_back(s7::sample_point(rng));

  // The class exclusions are per structure: a pure-class form would have the
  // matching residual identically zero, so each residual must exceed the
  // threshold somewhere on the sampled set. (At isolated points where omega
  // aligns with the pointwise cross-product form, two residuals vanish
  // exactly, so a per-point quantifier cannot hold.)
  double fg_class_least = 1e300;  // min over forms of (max over points) per residual
  double fg_point_least = 1e300;  // min over everything, reported for reference
  for (const AltForm& omega : family) {
    if (g2::stabilizer_algebra(omega).dimension() != 14) ++stab_bad;
    double np = 0.0, cc = 0.0, lcp = 0.0;
    for (const auto& x : points) {
      const AltForm t = s7::torsion_at(rep, x);
      tc_worst = std::max(tc_worst, max_abs_diff(g2::characteristic_torsion(omega, t), t));
      const auto fg = g2::fg_type_residuals(omega, g2::frame_d(omega, t),
                                            g2::codifferential(omega, t));
      np = std::max(np, fg.nearly_parallel);
      cc = std::max(cc, fg.cocalibrated);
      lcp = std::max(lcp, fg.conformally_parallel);
      fg_point_least = std::min({fg_point_least, fg.nearly_parallel, fg.cocalibrated,
                                 fg.conformally_parallel});
    }
    fg_class_least = std::min({fg_class_least, np, cc, lcp});
  }
  const bool pass = tc_worst <= 1e-6 && stab_bad == 0 && fg_class_least > 0.1;
  return {pass, "21 forms x 100 points: |T^c - T| " + fmt(tc_worst) +
                    " (tol 1e-6); stabilizer dim≠14 count " + std::to_string(stab_bad) +
                    "; class residuals per form " + fmt(fg_class_least) +
                    " (> 0.1, pointwise min " + fmt(fg_point_least) + ")"};
}

// ---- criterion 8: the coordinate-patch suite ----
std::pair<bool, std::string> vectorial_suite() {
  using namespace torsionlab::vectorial;
  const auto hp = half_plane_patch();
  const auto sp = sphere_polar_patch();
  const auto flat = vertical_scaling_field(-1.0);
  Rng rng(2030);

  double gauss_worst = 0.0, curv_worst = 0.0, parallel_worst = 0.0, weyl_worst = 0.0;
  double negative_least = 1e300;
  for (int s = 0; s < 20; ++s) {
    VectorN q(2);
    q << -1.5 + 3.0 * rng.uniform(), 0.8 + 1.8 * rng.uniform();
    gauss_worst = std::max(gauss_worst, gauss_divergence_criterion(hp, flat, q));
    curv_worst = std::max(curv_worst, vectorial_curvature_residual(hp, flat, q));
    const auto pc = parallel_V_check(hp, flat, q);
    parallel_worst = std::max({parallel_worst, pc.defect,
                               std::abs(fd_sectional_curvature(hp, q, 0, 1) -
                                        pc.predicted_curvature)});
    weyl_worst = std::max(weyl_worst, weyl_relation_residual(hp, flat, q));
    weyl_worst = std::max(weyl_worst, weyl_relation_residual(hp, zero_field(2), q));

    VectorN qs(2);
    qs << 0.7 + 1.5 * rng.uniform(), -0.7 + 1.4 * rng.uniform();
    negative_least = std::min(negative_least, gauss_divergence_criterion(sp, zero_field(2), qs));
    negative_least =
        std::min(negative_least, vectorial_curvature_residual(sp, zero_field(2), qs));
    weyl_worst = std::max(weyl_worst, weyl_relation_residual(sp, random_smooth_field(2, 77), qs));
  }
  const auto eu = euclidean_patch(2);
  for (int s = 0; s < 10; ++s) {
    VectorN q(2);
    q << -0.5 + rng.uniform(), -0.5 + rng.uniform();
    weyl_worst = std::max(weyl_worst, weyl_relation_residual(eu, random_smooth_field(2, 78), q));
  }

  const bool pass = gauss_worst < 1e-5 && curv_worst < 1e-5 && parallel_worst < 1e-4 &&
                    negative_least > 0.5 && weyl_worst < 1e-4;
  return {pass, "gauss " + fmt(gauss_worst) + " (tol 1e-5); curvature formula " +
                    fmt(curv_worst) + " (tol 1e-5); parallel field " + fmt(parallel_worst) +
                    " (tol 1e-4); sphere controls min " + fmt(negative_least) +
                    " (> 0.5); weyl " + fmt(weyl_worst) + " (tol 1e-4)"};
}

// ---- criterion 9: byte-identical reports from the CLI ----
std::pair<bool, std::string> cli_determinism() {
#ifndef VERIFY_BIN
  return {false, "verify binary path not configured"};
#else
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path r1 = dir / "torsionlab_accept_run1.json";
  const fs::path r2 = dir / "torsionlab_accept_run2.json";
  const std::string base = std::string(VERIFY_BIN) +
                           " all --samples 30 --seed 777 --format json > /dev/null 2>&1 --out ";
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const int c1 = std::system((base + r1.string()).c_str());
  const int c2 = std::system((base + r2.string()).c_str());
  if (c1 != 0 || c2 != 0)
    return {false, "verify all exited nonzero (" + std::to_string(c1) + ", " +
                       std::to_string(c2) + ")"};
  const std::string a = slurp(r1), b = slurp(r2);
  fs::remove(r1);
  fs::remove(r2);
  if (a.empty() || a != b) return {false, "reports differ or are empty"};
  return {true, "two `verify all` runs, " + std::to_string(a.size()) +
                    " bytes each, byte-identical"};
#endif
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "clifford-relations-exact", clifford_exact, 1.0},
      {2, "sphere-torsion-invariants", sphere_invariants, 10.0},
      {3, "derivative-identity-web", derivative_identities, 0.0},
      {4, "sigma-consistency-exhaustive", sigma_consistency, 0.0},
      {5, "closure-dichotomy-instances", lie_dichotomy, 0.0},
      {6, "curvature-theorems", curvature_theorems, 0.0},
      {7, "characteristic-torsion-family", characteristic_torsion_family, 60.0},
      {8, "coordinate-patch-suite", vectorial_suite, 0.0},
      {9, "report-determinism", cli_determinism, 0.0},
  };
  for (const Criterion& c : criteria) run_criterion(c);
  if (g_failures > 0) {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  return 0;
}
