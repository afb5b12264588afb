#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "torsionlab/alt_form.hpp"
#include "torsionlab/rng.hpp"

namespace torsionlab {

inline double trace_inner(const Matrix& a, const Matrix& b) {
  return (a.transpose() * b).trace();
}

inline double skewness_residual(const Matrix& m) {
  return (m + m.transpose()).cwiseAbs().maxCoeff();
}

inline bool is_skew(const Matrix& m, double tol = 1e-10) {
  return m.rows() == m.cols() && skewness_residual(m) <= tol;
}

/// so(n) element associated with a 2-form: <B x, y> = beta(x, y).
inline Matrix matrix_of_two_form(const AltForm& beta) {
  if (beta.degree() != 2) throw std::invalid_argument("matrix_of_two_form: degree must be 2");
  const int n = beta.dim();
  Matrix b = Matrix::Zero(n, n);
  for (const auto& [key, c] : beta.terms()) {
    b(key[1] - 1, key[0] - 1) += c;
    b(key[0] - 1, key[1] - 1) -= c;
  }
  return b;
}

inline AltForm two_form_of_matrix(const Matrix& b) {
  const int n = static_cast<int>(b.rows());
  AltForm beta(n, 2);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) beta.add_term({p, q}, b(q - 1, p - 1));
  return beta;
}

/// Derivation action of a skew endomorphism on a k-form,
///   (A . alpha)(X_1,...,X_k) = -sum_p alpha(X_1,...,A X_p,...,X_k),
/// the differential of the pullback action of exp(-tA) rotations.
inline AltForm skew_action(const Matrix& a, const AltForm& alpha) {
  const int n = alpha.dim();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("skew_action: dimension mismatch");
  AltForm out(n, alpha.degree());
  // dual action on the coframe: A . e^i = -sum_q A(i,q) e^q, extended as a
  // derivation over wedge products
  for (const auto& [key, c] : alpha.terms()) {
    for (std::size_t p = 0; p < key.size(); ++p) {
      for (int q = 1; q <= n; ++q) {
        const double aiq = a(key[p] - 1, q - 1);
        if (aiq == 0.0) continue;
        MultiIndex replaced = key;
        replaced[p] = q;
        out.add_term(std::move(replaced), -c * aiq);
      }
    }
  }
  return out;
}

/// Basis of so(n): matrices of the 2-forms e_p ^ e_q, p < q, lexicographic.
inline std::vector<Matrix> so_basis(int n) {
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      Matrix b = Matrix::Zero(n, n);
      b(q - 1, p - 1) = 1.0;
      b(p - 1, q - 1) = -1.0;
      out.push_back(std::move(b));
    }
  return out;
}

/// Scaling-and-squaring Taylor exponential; adequate for the small skew
/// matrices used here (n <= 8).
inline Matrix matrix_exp(const Matrix& a) {
  int squarings = 0;
  Matrix scaled = a;
  while (scaled.cwiseAbs().sum() > 0.5 && squarings < 40) {
    scaled *= 0.5;
    ++squarings;
  }
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  for (int k = 1; k <= 20; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Haar-ish random rotation: QR of a Gaussian matrix with the sign of R's
/// diagonal absorbed, then a column swap if det is negative.
inline Matrix random_special_orthogonal(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (q.determinant() < 0) q.col(0).swap(q.col(1));
  return q;
}

inline VectorN random_unit_vector(int n, Rng& rng) {
  VectorN v(n);
  double nn = 0.0;
  do {
    for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
    nn = v.norm();
  } while (nn < 1e-12);
  return v / nn;
}

/// Components of a k-form in a rotated frame W_a = sum_i A(i,a) e_i.
inline AltForm transform_form(const AltForm& alpha, const Matrix& a) {
  const int n = alpha.dim();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("transform_form: dimension mismatch");
  AltForm out(n, alpha.degree());
  std::vector<VectorN> cols(static_cast<std::size_t>(alpha.degree()), VectorN(n));
  for (const MultiIndex& key : increasing_indices(n, alpha.degree())) {
    for (std::size_t p = 0; p < key.size(); ++p) cols[p] = a.col(key[p] - 1);
    const double c = alpha.evaluate(cols);
    if (c != 0.0) out.add_term(key, c);
  }
  return out;
}

}  // namespace torsionlab
