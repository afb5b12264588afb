#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "torsionlab/alt_form.hpp"
#include "torsionlab/curvature.hpp"
#include "torsionlab/linalg.hpp"

namespace torsionlab {

// Algebraic identities driven by a torsion 3-form T with constant frame
// coefficients. The induced map T(X,Y) is the metric dual of the 2-slot
// contraction, <T(x,y), z> = T(x,y,z), and every curvature quantity below is
// polynomial in T.

inline void require_torsion(const AltForm& t) {
  if (t.degree() != 3) throw std::invalid_argument("torsion form must have degree 3");
}

inline VectorN torsion_map(const AltForm& t, const VectorN& x, const VectorN& y) {
  require_torsion(t);
  if (x.size() != t.dim() || y.size() != t.dim())
    throw std::invalid_argument("torsion_map: dimension mismatch");
  const AltForm one = interior(y, interior(x, t));  // z -> T(x,y,z)
  VectorN out = VectorN::Zero(t.dim());
  for (const auto& [key, c] : one.terms()) out(key[0] - 1) = c;
  return out;
}

/// Table of frame values T(e_i, e_j) as columns, t[i][j] in R^n (0-based).
inline std::vector<std::vector<VectorN>> torsion_map_table(const AltForm& t) {
  require_torsion(t);
  const int n = t.dim();
  std::vector<std::vector<VectorN>> tab(
      static_cast<std::size_t>(n), std::vector<VectorN>(static_cast<std::size_t>(n), VectorN::Zero(n)));
  for (const auto& [key, c] : t.terms()) {
    const int i = key[0], j = key[1], k = key[2];
    // fill all slot orderings of <T(e_a,e_b), e_c> = T_{abc}
    const int idx[3] = {i, j, k};
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const double sg[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p) {
      const int a = idx[perms[p][0]], b = idx[perms[p][1]], cc = idx[perms[p][2]];
      tab[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)](cc - 1) = sg[p] * c;
    }
  }
  return tab;
}

/// sigma_T = 1/2 sum_i (e_i . T) ^ (e_i . T), the 4-form measuring the failure
/// of -T(.,.) to satisfy the Jacobi identity.
inline AltForm sigma_contraction(const AltForm& t) {
  require_torsion(t);
  const int n = t.dim();
  AltForm sigma(n, 4);
  for (int i = 1; i <= n; ++i) {
    const AltForm eit = interior(frame_vector(n, i), t);
    sigma += 0.5 * wedge(eit, eit);
  }
  return sigma;
}

/// sigma_T(x,y,z,v) = <T(x,y),T(z,v)> + <T(y,z),T(x,v)> + <T(z,x),T(y,v)>.
inline double sigma_pairing(const AltForm& t, const VectorN& x, const VectorN& y,
                            const VectorN& z, const VectorN& v) {
  const VectorN txy = torsion_map(t, x, y);
  const VectorN tyz = torsion_map(t, y, z);
  const VectorN tzx = torsion_map(t, z, x);
  return txy.dot(torsion_map(t, z, v)) + tyz.dot(torsion_map(t, x, v)) +
         tzx.dot(torsion_map(t, y, v));
}

/// Ric(X,Y) = 1/4 sum_i <T(X,e_i), T(Y,e_i)>; positive semidefinite with
/// trace (3/2)|T|^2, and Ric(X,X) = 0 exactly when X . T = 0.
inline Matrix ricci_from_torsion(const AltForm& t) {
  require_torsion(t);
  const int n = t.dim();
  const auto tab = torsion_map_table(t);
  Matrix ric = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        s += tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].dot(
            tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]);
      ric(a, b) = ric(b, a) = 0.25 * s;
    }
  return ric;
}

/// Curvature of the underlying metric when the torsionful connection is flat:
///   R(X,Y,Z,V) = -1/6 <T(X,Y),T(Z,V)> + 1/12 <T(Y,Z),T(X,V)> + 1/12 <T(Z,X),T(Y,V)>.
inline CurvatureTensor riemann_from_torsion(const AltForm& t) {
  require_torsion(t);
  const int n = t.dim();
  const auto tab = torsion_map_table(t);
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const auto& tij = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          const auto& tjk = tab[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
          const auto& tki = tab[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
          const auto& tkl = tab[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
          const auto& til = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
          const auto& tjl = tab[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
          r.at(i, j, k, l) =
              -tij.dot(tkl) / 6.0 + tjk.dot(til) / 12.0 + tki.dot(tjl) / 12.0;
        }
  return r;
}

/// K(X,Y) = |T(X,Y)|^2 / (4 [ |X|^2 |Y|^2 - <X,Y>^2 ]) = R(X,Y,Y,X)/gram.
inline double sectional_from_torsion(const AltForm& t, const VectorN& x, const VectorN& y,
                                     double degeneracy_tol = 1e-12) {
  const double gram = x.squaredNorm() * y.squaredNorm() - std::pow(x.dot(y), 2);
  if (gram <= degeneracy_tol)
    throw std::domain_error("sectional_from_torsion: degenerate plane");
  return torsion_map(t, x, y).squaredNorm() / (4.0 * gram);
}

/// Covariant derivative of T along v for the flat connection: -1/3 (v . sigma).
inline AltForm nabla_T(const AltForm& sigma, const VectorN& v) {
  if (sigma.degree() != 4) throw std::invalid_argument("nabla_T: sigma must have degree 4");
  return -1.0 / 3.0 * interior(v, sigma);
}

/// Levi-Civita derivative of T along v: +1/6 (v . sigma); together with
/// nabla_T this realizes the ratio law (nabla T) = -2 (nabla^g T).
inline AltForm nabla_g_T(const AltForm& sigma, const VectorN& v) {
  if (sigma.degree() != 4) throw std::invalid_argument("nabla_g_T: sigma must have degree 4");
  return 1.0 / 6.0 * interior(v, sigma);
}

/// Natural so(n)-action of a 2-form on a k-form; for beta = v . T acting on T
/// itself the result is sigma_T(.,.,.,v).
inline AltForm two_form_action(const AltForm& beta, const AltForm& alpha) {
  if (beta.degree() != 2) throw std::invalid_argument("two_form_action: degree-2 form required");
  if (beta.dim() != alpha.dim())
    throw std::invalid_argument("two_form_action: dimension mismatch");
  return skew_action(matrix_of_two_form(beta), alpha);
}

/// dT of a flat-connection torsion, expressed through sigma: dT = (2/3) sigma.
inline AltForm dT_flat(const AltForm& sigma) {
  if (sigma.degree() != 4) throw std::invalid_argument("dT_flat: sigma must have degree 4");
  return 2.0 / 3.0 * sigma;
}

/// First-Bianchi combination dT - sigma + (nabla T as a 4-form), slotted as
/// A(X,Y,Z,V) = (nabla_V T)(X,Y,Z). Identically zero for every 3-form; a
/// nonzero residual indicates a sign error in one of the three code paths.
inline AltForm bianchi_residual(const AltForm& t) {
  require_torsion(t);
  const int n = t.dim();
  const AltForm sigma = sigma_contraction(t);
  AltForm res = dT_flat(sigma) - sigma;
  for (const MultiIndex& key : increasing_indices(n, 4)) {
    const AltForm nt = nabla_T(sigma, frame_vector(n, key[3]));
    const double a = nt.coeff({key[0], key[1], key[2]});
    if (a != 0.0) res.add_term(key, a);
  }
  return res;
}

/// Max-norm of the derivation action of the 2-form x . T on the curvature
/// tensor rebuilt from T. Vanishes when the curvature is invariant under the
/// rotations generated by x . T; nonzero for generic 3-forms.
inline double curvature_commutator_residual(const AltForm& t, const VectorN& x) {
  require_torsion(t);
  const int n = t.dim();
  const CurvatureTensor r = riemann_from_torsion(t);
  const Matrix b = matrix_of_two_form(interior(x, t));
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s -= b(m, i) * r(m, j, k, l) + b(m, j) * r(i, m, k, l) +
                 b(m, k) * r(i, j, m, l) + b(m, l) * r(i, j, k, m);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

}  // namespace torsionlab
