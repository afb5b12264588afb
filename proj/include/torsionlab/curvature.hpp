#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "torsionlab/alt_form.hpp"

namespace torsionlab {

/// Rank-4 curvature array R(e_i,e_j,e_k,e_l) in an orthonormal frame,
/// 0-based indices. Carries the usual symmetries
///   R_ijkl = -R_jikl = -R_ijlk = R_klij
/// and the first Bianchi sum R_ijkl + R_jkil + R_kijl = 0; the residual
/// accessors measure how far a stored array is from honoring them.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int dim) : dim_(dim), r_(static_cast<std::size_t>(dim * dim * dim * dim), 0.0) {
    if (dim < 1) throw std::invalid_argument("CurvatureTensor: dimension must be positive");
  }

  int dim() const { return dim_; }

  double& at(int i, int j, int k, int l) { return r_[index(i, j, k, l)]; }
  double at(int i, int j, int k, int l) const { return r_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return r_[index(i, j, k, l)]; }

  double symmetry_residual() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          for (int l = 0; l < dim_; ++l) {
            const double r = at(i, j, k, l);
            m = std::max(m, std::abs(r + at(j, i, k, l)));
            m = std::max(m, std::abs(r + at(i, j, l, k)));
            m = std::max(m, std::abs(r - at(k, l, i, j)));
          }
    return m;
  }

  double first_bianchi_residual() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          for (int l = 0; l < dim_; ++l)
            m = std::max(m, std::abs(at(i, j, k, l) + at(j, k, i, l) + at(k, i, j, l)));
    return m;
  }

  /// Ricci contraction Ric(X,Y) = sum_i R(e_i, X, Y, e_i).
  Matrix ricci() const {
    Matrix ric = Matrix::Zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += at(i, j, k, i);
        ric(j, k) = s;
      }
    return ric;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : r_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return static_cast<std::size_t>(((i * dim_ + j) * dim_ + k) * dim_ + l);
  }

  int dim_;
  std::vector<double> r_;
};

}  // namespace torsionlab
