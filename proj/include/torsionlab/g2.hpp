#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "torsionlab/lie.hpp"
#include "torsionlab/linalg.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab::g2 {

/// The reference generic 3-form on R^7, +1 on the seven octonion lines.
/// Its stabilizer in so(7) has dimension 14 and its associated pairing is
/// negative definite, so it induces the opposite of the lexicographic frame
/// orientation.
inline AltForm standard_form() {
  AltForm phi(7, 3);
  phi.add_term({1, 2, 4}, 1.0);
  phi.add_term({2, 3, 5}, 1.0);
  phi.add_term({3, 4, 6}, 1.0);
  phi.add_term({4, 5, 7}, 1.0);
  phi.add_term({5, 6, 1}, 1.0);
  phi.add_term({6, 7, 2}, 1.0);
  phi.add_term({7, 1, 3}, 1.0);
  return phi;
}

/// Kernel of so(7) -> Lambda^3, a -> a.omega (derivation action), returned as
/// a span with a trace-orthonormal basis. Dimension 14 exactly for generic omega.
inline lie::LieAlgebraSpan stabilizer_algebra(const AltForm& omega) {
  if (omega.dim() != 7 || omega.degree() != 3)
    throw std::invalid_argument("stabilizer_algebra: a 3-form on R^7 is required");
  const std::vector<Matrix> so7 = so_basis(7);
  const std::vector<MultiIndex> rows = increasing_indices(7, 3);
  Matrix action(static_cast<int>(rows.size()), static_cast<int>(so7.size()));
  for (std::size_t col = 0; col < so7.size(); ++col) {
    const AltForm img = skew_action(so7[col], omega);
    for (std::size_t row = 0; row < rows.size(); ++row)
      action(static_cast<int>(row), static_cast<int>(col)) = img.coeff(rows[row]);
  }
  Eigen::JacobiSVD<Matrix> svd(action, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-9 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  lie::LieAlgebraSpan span;
  span.ambient_dim = 7;
  const int cols = static_cast<int>(so7.size());
  for (int i = 0; i < cols; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s > cutoff) continue;
    Matrix k = Matrix::Zero(7, 7);
    for (std::size_t b = 0; b < so7.size(); ++b)
      k += svd.matrixV()(static_cast<int>(b), i) * so7[b];
    // columns of V are orthonormal and the so(7) basis is trace-orthogonal
    // with norm sqrt(2); rescale to trace-orthonormal
    span.basis.push_back(k / std::sqrt(2.0));
  }
  span.generators = span.basis;
  return span;
}

/// Pairing B(X,Y) vol = (X . omega) ^ (Y . omega) ^ omega as a symmetric 7x7
/// matrix of top-form coefficients in the lexicographic frame orientation.
inline Matrix b_form(const AltForm& omega) {
  if (omega.dim() != 7 || omega.degree() != 3)
    throw std::invalid_argument("b_form: a 3-form on R^7 is required");
  Matrix b(7, 7);
  const MultiIndex top{1, 2, 3, 4, 5, 6, 7};
  std::vector<AltForm> contractions;
  contractions.reserve(7);
  for (int i = 1; i <= 7; ++i) contractions.push_back(interior(frame_vector(7, i), omega));
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      const AltForm w = wedge(wedge(contractions[static_cast<std::size_t>(i)],
                                    contractions[static_cast<std::size_t>(j)]),
                              omega);
      b(i, j) = b(j, i) = w.coeff(top);
    }
  return b;
}

/// Orientation induced by a generic 3-form: the sign that makes its pairing
/// positive definite. Throws for indefinite (split-type or degenerate) forms.
inline int induced_orientation(const AltForm& omega) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(b_form(omega));
  const VectorN ev = eig.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev.minCoeff() > 1e-9 * scale) return 1;
  if (ev.maxCoeff() < -1e-9 * scale) return -1;
  throw std::domain_error("induced_orientation: pairing is not definite");
}

/// Genericity: stabilizer dimension 14 and definite pairing (either sign;
/// the sign only selects the induced orientation).
inline bool genericity_check(const AltForm& omega) {
  if (stabilizer_algebra(omega).dimension() != 14) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(b_form(omega));
  const VectorN ev = eig.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.minCoeff() > 1e-9 * scale || ev.maxCoeff() < -1e-9 * scale;
}

/// Exterior derivative at a point of the parallelized space, in the parallel
/// frame. The coframe obeys d e_i = e_i . T, so for alpha = sum_I f_I e_I:
///   d alpha = sum_k e_k ^ (D_k alpha) + sum_I f_I sum_p (-1)^{p-1} e_{i_1} ^ ... ^ d e_{i_p} ^ ...
/// where D_k alpha carries the directional derivatives of the coefficients
/// (null for constant forms).
inline AltForm frame_d(const AltForm& alpha, const AltForm& torsion,
                       const std::vector<AltForm>* coeff_derivatives = nullptr) {
  const int n = alpha.dim();
  if (torsion.dim() != n) throw std::invalid_argument("frame_d: dimension mismatch");
  require_torsion(torsion);
  AltForm out(n, alpha.degree() + 1);
  if (coeff_derivatives != nullptr) {
    if (static_cast<int>(coeff_derivatives->size()) != n)
      throw std::invalid_argument("frame_d: one coefficient derivative per frame direction");
    for (int k = 1; k <= n; ++k) {
      const AltForm& dk = (*coeff_derivatives)[static_cast<std::size_t>(k - 1)];
      if (dk.dim() != n || dk.degree() != alpha.degree())
        throw std::invalid_argument("frame_d: coefficient derivative shape mismatch");
      out += wedge(AltForm::basis(n, {k}), dk);
    }
  }
  for (const auto& [key, c] : alpha.terms()) {
    for (std::size_t p = 0; p < key.size(); ++p) {
      const AltForm de = interior(frame_vector(n, key[p]), torsion);
      MultiIndex prefix(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(p));
      MultiIndex suffix(key.begin() + static_cast<std::ptrdiff_t>(p) + 1, key.end());
      const AltForm piece =
          wedge(AltForm::basis(n, prefix), wedge(de, AltForm::basis(n, suffix)));
      out += ((p % 2 == 0) ? c : -c) * piece;
    }
  }
  return out;
}

/// Codifferential delta = (-1)^{n(k+1)+1} * d * (metric identity in the frame,
/// both stars in the same orientation so the sign is orientation-free).
/// For point-dependent coefficients pass the directional derivatives of alpha;
/// the star of the derivatives is the derivative of the star.
inline AltForm codifferential(const AltForm& alpha, const AltForm& torsion,
                              const std::vector<AltForm>* coeff_derivatives = nullptr) {
  const int n = alpha.dim();
  const int k = alpha.degree();
  if (k == 0) throw std::invalid_argument("codifferential: degree-0 form has no codifferential");
  const AltForm star = hodge(alpha);
  std::vector<AltForm> star_derivs;
  const std::vector<AltForm>* star_derivs_ptr = nullptr;
  if (coeff_derivatives != nullptr) {
    star_derivs.reserve(coeff_derivatives->size());
    for (const AltForm& d : *coeff_derivatives) star_derivs.push_back(hodge(d));
    star_derivs_ptr = &star_derivs;
  }
  const AltForm d_star = frame_d(star, torsion, star_derivs_ptr);
  const int sign = ((n * (k + 1) + 1) % 2 == 0) ? 1 : -1;
  return static_cast<double>(sign) * hodge(d_star);
}

struct ThetaResult {
  VectorN theta;    // components of the 1-form
  double residual;  // least-squares residual of -(theta . omega) = delta omega
};

/// Least-squares solution of -(theta . omega) = delta omega (7 unknowns, 21
/// equations). Unique for generic omega; rank deficiency raises domain_error.
inline ThetaResult theta_from_delta(const AltForm& omega, const AltForm& delta_omega) {
  if (omega.dim() != 7 || omega.degree() != 3)
    throw std::invalid_argument("theta_from_delta: a 3-form on R^7 is required");
  if (delta_omega.dim() != 7 || delta_omega.degree() != 2)
    throw std::invalid_argument("theta_from_delta: delta omega must be a 2-form");
  const std::vector<MultiIndex> rows = increasing_indices(7, 2);
  Matrix a(static_cast<int>(rows.size()), 7);
  VectorN b(static_cast<int>(rows.size()));
  for (int col = 0; col < 7; ++col) {
    const AltForm f = -1.0 * interior(frame_vector(7, col + 1), omega);
    for (std::size_t row = 0; row < rows.size(); ++row)
      a(static_cast<int>(row), col) = f.coeff(rows[row]);
  }
  for (std::size_t row = 0; row < rows.size(); ++row)
    b(static_cast<int>(row)) = delta_omega.coeff(rows[row]);
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  qr.setThreshold(1e-9);
  if (qr.rank() < 7)
    throw std::domain_error("theta_from_delta: contraction map is rank deficient");
  ThetaResult out;
  out.theta = qr.solve(b);
  out.residual = (a * out.theta - b).norm();
  return out;
}

/// Torsion of the characteristic connection attached to a generic parallel
/// 3-form, assembled from its exterior derivative and codifferential:
///   T^c = -*d omega + 1/6 <d omega, *omega> omega + *(theta ^ omega),
/// with the Hodge star taken in the orientation induced by omega. Validated
/// against torsion_at across the whole rotated family and by the specialized
/// case d omega = tau *omega, where it reduces to T^c = (tau/6) omega.
inline AltForm characteristic_torsion(const AltForm& omega, const AltForm& torsion) {
  const int o = induced_orientation(omega);
  const AltForm d_omega = frame_d(omega, torsion);
  const AltForm delta_omega = codifferential(omega, torsion);
  const ThetaResult th = theta_from_delta(omega, delta_omega);
  AltForm theta_form(7, 1);
  for (int i = 1; i <= 7; ++i)
    if (th.theta(i - 1) != 0.0) theta_form.add_term({i}, th.theta(i - 1));
  AltForm tc = -1.0 * hodge(d_omega, o);
  tc += inner(d_omega, hodge(omega, o)) / 6.0 * omega;
  tc += hodge(wedge(theta_form, omega), o);
  return tc;
}

/// Residuals against the three pure torsion classes of a generic 3-form.
/// A structure is classified to a class when the matching residual vanishes;
/// all three strictly positive is the general type.
struct FGResiduals {
  double nearly_parallel = 0.0;        // min_lambda |d omega - lambda *omega|
  double cocalibrated = 0.0;           // |delta omega|
  double conformally_parallel = 0.0;   // min_theta |d omega - theta ^ omega|
};

inline FGResiduals fg_type_residuals(const AltForm& omega, const AltForm& d_omega,
                                     const AltForm& delta_omega) {
  if (omega.dim() != 7 || omega.degree() != 3)
    throw std::invalid_argument("fg_type_residuals: a 3-form on R^7 is required");
  FGResiduals out;
  const AltForm star_omega = hodge(omega);
  const double lambda = inner(d_omega, star_omega) / norm2(star_omega);
  out.nearly_parallel = norm(d_omega - lambda * star_omega);
  out.cocalibrated = norm(delta_omega);
  const std::vector<MultiIndex> rows = increasing_indices(7, 4);
  Matrix a(static_cast<int>(rows.size()), 7);
  VectorN b(static_cast<int>(rows.size()));
  for (int col = 0; col < 7; ++col) {
    const AltForm w = wedge(AltForm::basis(7, {col + 1}), omega);
    for (std::size_t row = 0; row < rows.size(); ++row)
      a(static_cast<int>(row), col) = w.coeff(rows[row]);
  }
  for (std::size_t row = 0; row < rows.size(); ++row)
    b(static_cast<int>(row)) = d_omega.coeff(rows[row]);
  const VectorN theta = a.colPivHouseholderQr().solve(b);
  out.conformally_parallel = (a * theta - b).norm();
  return out;
}

}  // namespace torsionlab::g2
