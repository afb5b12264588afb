#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/alt_form.hpp"
#include "torsionlab/rng.hpp"

namespace torsionlab::vectorial {

/// Thrown when a finite-difference stencil would leave the coordinate box.
class StencilError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Box {
  VectorN lo, hi;

  bool contains(const VectorN& p, double margin) const {
    for (int i = 0; i < p.size(); ++i)
      if (p(i) < lo(i) + margin || p(i) > hi(i) - margin) return false;
    return true;
  }
};

/// Coordinate-patch metric with central-difference differentiation. All
/// curvature quantities of this module are local; nothing global is modeled.
struct MetricPatch {
  int dim = 2;
  std::function<Matrix(const VectorN&)> metric;
  Box domain;
  double fd_step = 1e-4;

  /// Eigenvalue check of symmetry and positive definiteness on a sample grid,
  /// plus the step-vs-box-size constraint. Returns the smallest eigenvalue seen.
  double validate(int grid = 5) const {
    double box_size = 0.0;
    for (int i = 0; i < dim; ++i) box_size = std::max(box_size, domain.hi(i) - domain.lo(i));
    if (!(fd_step > 0.0) || fd_step > 1e-3 * box_size)
      throw std::invalid_argument("MetricPatch: fd_step too large for the domain");
    double min_eig = std::numeric_limits<double>::max();
    const int total = static_cast<int>(std::pow(grid, dim));
    for (int flat = 0; flat < total; ++flat) {
      VectorN p(dim);
      int rest = flat;
      for (int i = 0; i < dim; ++i) {
        const int gi = rest % grid;
        rest /= grid;
        p(i) = domain.lo(i) + (domain.hi(i) - domain.lo(i)) * (gi + 0.5) / grid;
      }
      const Matrix g = metric(p);
      if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("MetricPatch: metric is not symmetric");
      Eigen::SelfAdjointEigenSolver<Matrix> eig(g);
      min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
      if (min_eig <= 0.0)
        throw std::invalid_argument("MetricPatch: metric is not positive definite");
    }
    return min_eig;
  }
};

struct VectorFieldPatch {
  std::function<VectorN(const VectorN&)> components;  // contravariant
};

// ---- canonical fixtures ----

inline MetricPatch euclidean_patch(int dim = 2) {
  MetricPatch p;
  p.dim = dim;
  p.metric = [dim](const VectorN&) { return Matrix::Identity(dim, dim); };
  p.domain.lo = VectorN::Constant(dim, -1.0);
  p.domain.hi = VectorN::Constant(dim, 1.0);
  p.fd_step = 1e-4;
  return p;
}

/// Hyperbolic half plane, coordinates (x, y), metric (dx^2 + dy^2)/y^2.
inline MetricPatch half_plane_patch() {
  MetricPatch p;
  p.dim = 2;
  p.metric = [](const VectorN& q) {
    Matrix g = Matrix::Identity(2, 2);
    g /= q(1) * q(1);
    return g;
  };
  p.domain.lo = VectorN(2);
  p.domain.hi = VectorN(2);
  p.domain.lo << -2.0, 0.5;
  p.domain.hi << 2.0, 3.0;
  p.fd_step = 1e-4;
  return p;
}

/// Round unit sphere, polar coordinates (theta, phi), metric dtheta^2 + sin^2(theta) dphi^2.
inline MetricPatch sphere_polar_patch() {
  MetricPatch p;
  p.dim = 2;
  p.metric = [](const VectorN& q) {
    Matrix g = Matrix::Identity(2, 2);
    const double s = std::sin(q(0));
    g(1, 1) = s * s;
    return g;
  };
  p.domain.lo = VectorN(2);
  p.domain.hi = VectorN(2);
  p.domain.lo << 0.4, -1.0;
  p.domain.hi << 2.6, 1.0;
  p.fd_step = 1e-4;
  return p;
}

/// Flat square torus patch (locally euclidean).
inline MetricPatch flat_torus_patch() {
  MetricPatch p = euclidean_patch(2);
  p.domain.lo = VectorN::Constant(2, 0.1);
  p.domain.hi = VectorN::Constant(2, 6.0);
  return p;
}

inline VectorFieldPatch zero_field(int dim) {
  return VectorFieldPatch{[dim](const VectorN&) { return VectorN::Zero(dim); }};
}

/// s * y d/dy on a 2-dimensional (x, y) patch.
inline VectorFieldPatch vertical_scaling_field(double s) {
  return VectorFieldPatch{[s](const VectorN& q) {
    VectorN v = VectorN::Zero(2);
    v(1) = s * q(1);
    return v;
  }};
}

/// Smooth pseudo-random polynomial/trigonometric field for identity tests.
inline VectorFieldPatch random_smooth_field(int dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coeffs;
  for (int i = 0; i < dim * (2 * dim + 2); ++i) coeffs.push_back(0.3 * rng.gaussian());
  return VectorFieldPatch{[dim, coeffs](const VectorN& q) {
    VectorN v(dim);
    std::size_t c = 0;
    for (int i = 0; i < dim; ++i) {
      double s = coeffs[c++];
      for (int j = 0; j < dim; ++j) s += coeffs[c++] * q(j) + coeffs[c++] * std::sin(q(j));
      s += coeffs[c++] * q(0) * q(dim - 1);
      v(i) = s;
    }
    return v;
  }};
}

// ---- finite-difference machinery ----

namespace detail {

inline void require_stencil(const MetricPatch& patch, const VectorN& p, int layers) {
  if (p.size() != patch.dim) throw std::invalid_argument("point dimension mismatch");
  if (!patch.domain.contains(p, layers * patch.fd_step))
    throw StencilError("finite-difference stencil leaves the domain");
}

template <typename F>
std::decay_t<decltype(std::declval<F>()(std::declval<VectorN>()))> central_diff(
    const F& f, const VectorN& p, int dir, double h) {
  VectorN pp = p, pm = p;
  pp(dir) += h;
  pm(dir) -= h;
  // materialize before the temporaries go out of scope
  std::decay_t<decltype(f(p))> out = f(pp);
  out -= f(pm);
  out *= 1.0 / (2.0 * h);
  return out;
}

}  // namespace detail

/// Rank-3 connection coefficients Gamma^i_{jk}, stored as a vector of
/// matrices G[i](j,k).
using Connection = std::vector<Matrix>;

/// Levi-Civita symbols Gamma^i_{jk} = 1/2 g^{im} (d_j g_mk + d_k g_mj - d_m g_jk)
/// from central differences of the metric.
inline Connection christoffels(const MetricPatch& patch, const VectorN& p) {
  detail::require_stencil(patch, p, 1);
  const int n = patch.dim;
  const double h = patch.fd_step;
  const Matrix g = patch.metric(p);
  const Matrix ginv = g.inverse();
  std::vector<Matrix> dg;
  dg.reserve(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) dg.push_back(detail::central_diff(patch.metric, p, d, h));
  Connection gamma(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int m = 0; m < n; ++m)
          s += ginv(i, m) * (dg[static_cast<std::size_t>(j)](m, k) +
                             dg[static_cast<std::size_t>(k)](m, j) -
                             dg[static_cast<std::size_t>(m)](j, k));
        gamma[static_cast<std::size_t>(i)](j, k) = 0.5 * s;
      }
  return gamma;
}

namespace detail {

/// Curvature transformation R(d_k, d_l) d_j = R^i_{jkl} d_i of an arbitrary
/// connection-coefficient field, by central differences of the coefficients:
///   R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj} - G^i_{lm} G^m_{kj}.
inline std::vector<double> connection_curvature(
    const std::function<Connection(const VectorN&)>& conn, int n, const VectorN& p, double h) {
  std::vector<Connection> dconn;
  dconn.reserve(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    VectorN pp = p, pm = p;
    pp(d) += h;
    pm(d) -= h;
    const Connection cp = conn(pp), cm = conn(pm);
    Connection dc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      dc[static_cast<std::size_t>(i)] =
          (cp[static_cast<std::size_t>(i)] - cm[static_cast<std::size_t>(i)]) / (2.0 * h);
    dconn.push_back(std::move(dc));
  }
  const Connection g0 = conn(p);
  std::vector<double> r(static_cast<std::size_t>(n * n * n * n), 0.0);
  auto at = [n, &r](int i, int j, int k, int l) -> double& {
    return r[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = dconn[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)](l, j) -
                     dconn[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)](k, j);
          for (int m = 0; m < n; ++m)
            s += g0[static_cast<std::size_t>(i)](k, m) * g0[static_cast<std::size_t>(m)](l, j) -
                 g0[static_cast<std::size_t>(i)](l, m) * g0[static_cast<std::size_t>(m)](k, j);
          at(i, j, k, l) = s;
        }
  return r;
}

/// Coefficients of the vectorial-torsion connection
///   nabla_X Y = nabla^g_X Y + <X,Y> V - <V,Y> X.
inline Connection vectorial_connection(const MetricPatch& patch, const VectorFieldPatch& field,
                                       const VectorN& p) {
  Connection gamma = christoffels(patch, p);
  const Matrix g = patch.metric(p);
  const VectorN v = field.components(p);
  const VectorN v_flat = g * v;
  const int n = patch.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double add = g(j, k) * v(i);
        if (i == j) add -= v_flat(k);
        gamma[static_cast<std::size_t>(i)](j, k) += add;
      }
  return gamma;
}

/// Coefficients of the associated torsion-free conformal connection
///   nabla^w_X Y = nabla^g_X Y + theta(X) Y + theta(Y) X - <X,Y> theta^sharp
/// with theta = -V^flat. This is the companion for which the vectorial
/// connection differs by the pure trace V^flat(X) Y, so that
///   R^nabla(X,Y)Z = R^w(X,Y)Z + dV(X,Y) Z
/// holds as an identity (validated by finite differences on every fixture).
inline Connection weyl_connection(const MetricPatch& patch, const VectorFieldPatch& field,
                                  const VectorN& p) {
  Connection gamma = christoffels(patch, p);
  const Matrix g = patch.metric(p);
  const VectorN v = field.components(p);
  const VectorN theta = -(g * v);
  const int n = patch.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double add = g(j, k) * v(i);  // -<X,Y> theta^sharp with theta^sharp = -V
        if (i == k) add += theta(j);
        if (i == j) add += theta(k);
        gamma[static_cast<std::size_t>(i)](j, k) += add;
      }
  return gamma;
}

/// Covariant derivative matrix (nabla_j V)^i of a vector field for an
/// arbitrary connection-coefficient field.
inline Matrix covariant_derivative(const VectorFieldPatch& field, const Connection& gamma,
                                   const VectorN& p, double h, int n) {
  Matrix dv(n, n);
  for (int j = 0; j < n; ++j) dv.col(j) = detail::central_diff(field.components, p, j, h);
  Matrix out = dv;
  const VectorN v = field.components(p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) out(i, j) += gamma[static_cast<std::size_t>(i)](j, m) * v(m);
  return out;
}

/// Exterior derivative of the metric dual of V: dV(d_k, d_l).
inline Matrix dv_two_form(const MetricPatch& patch, const VectorFieldPatch& field,
                          const VectorN& p) {
  const int n = patch.dim;
  const double h = patch.fd_step;
  auto v_flat = [&](const VectorN& q) -> VectorN { return patch.metric(q) * field.components(q); };
  Matrix out = Matrix::Zero(n, n);
  std::vector<VectorN> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d.push_back(detail::central_diff(v_flat, p, k, h));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      out(k, l) = d[static_cast<std::size_t>(k)](l) - d[static_cast<std::size_t>(l)](k);
  return out;
}

}  // namespace detail

/// Residual of the curvature identity available when the vectorial-torsion
/// connection is flat:
///   R^g(X,Y)Z = <X,Z> nabla_Y V - <Y,Z> nabla_X V
///             + Y <nabla_X V + |V|^2 X, Z> - X <nabla_Y V + |V|^2 Y, Z>,
/// with nabla the vectorial connection itself and the last two terms read as
/// the vectors Y, X scaled by the brackets. Near zero on flat examples; of the
/// order of the curvature otherwise.
inline double vectorial_curvature_residual(const MetricPatch& patch,
                                           const VectorFieldPatch& field, const VectorN& p) {
  detail::require_stencil(patch, p, 2);
  const int n = patch.dim;
  const double h = patch.fd_step;
  const Matrix g = patch.metric(p);
  const VectorN v = field.components(p);
  const double v2 = v.dot(g * v);
  const auto rg = detail::connection_curvature(
      [&patch](const VectorN& q) { return christoffels(patch, q); }, n, p, h);
  const Matrix nv = detail::covariant_derivative(
      field, detail::vectorial_connection(patch, field, p), p, h, n);
  auto rg_at = [n, &rg](int i, int j, int k, int l) {
    return rg[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  };
  double worst = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // lhs^i = R^g(d_x, d_y) d_z
        VectorN lhs(n);
        for (int i = 0; i < n; ++i) lhs(i) = rg_at(i, z, x, y);
        const VectorN nxv = nv.col(x), nyv = nv.col(y);
        const double bx = (g * nxv)(z) + v2 * g(x, z);
        const double by = (g * nyv)(z) + v2 * g(y, z);
        VectorN ex = VectorN::Zero(n), ey = VectorN::Zero(n);
        ex(x) = 1.0;
        ey(y) = 1.0;
        const VectorN rhs = g(x, z) * nyv - g(y, z) * nxv + bx * ey - by * ex;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
  return worst;
}

/// Flatness of the vectorial connection: max of |dV| and the max-norm of its
/// full finite-difference curvature. Both vanish exactly on flat examples.
inline double flatness_defect(const MetricPatch& patch, const VectorFieldPatch& field,
                              const VectorN& p) {
  detail::require_stencil(patch, p, 2);
  const int n = patch.dim;
  const auto r = detail::connection_curvature(
      [&patch, &field](const VectorN& q) { return detail::vectorial_connection(patch, field, q); },
      n, p, patch.fd_step);
  double worst = 0.0;
  for (double x : r) worst = std::max(worst, std::abs(x));
  worst = std::max(worst, detail::dv_two_form(patch, field, p).cwiseAbs().maxCoeff());
  return worst;
}

struct ParallelCheck {
  double defect;               // max |nabla_X V| over coordinate directions
  double predicted_curvature;  // -|V|^2
};

/// When nabla V = 0 the space has constant sectional curvature -|V|^2.
inline ParallelCheck parallel_V_check(const MetricPatch& patch, const VectorFieldPatch& field,
                                      const VectorN& p) {
  detail::require_stencil(patch, p, 2);
  const int n = patch.dim;
  const Matrix g = patch.metric(p);
  const VectorN v = field.components(p);
  const Matrix nv = detail::covariant_derivative(
      field, detail::vectorial_connection(patch, field, p), p, patch.fd_step, n);
  ParallelCheck out;
  out.defect = 0.0;
  for (int j = 0; j < n; ++j) {
    const VectorN col = nv.col(j);
    out.defect = std::max(out.defect, std::sqrt(col.dot(g * col)));
  }
  out.predicted_curvature = -v.dot(g * v);
  return out;
}

/// Finite-difference sectional curvature of the coordinate plane (i, j).
inline double fd_sectional_curvature(const MetricPatch& patch, const VectorN& p, int i, int j) {
  detail::require_stencil(patch, p, 2);
  const int n = patch.dim;
  const Matrix g = patch.metric(p);
  const auto r = detail::connection_curvature(
      [&patch](const VectorN& q) { return christoffels(patch, q); }, n, p, patch.fd_step);
  auto rat = [n, &r](int a, int b, int c, int d) {
    return r[static_cast<std::size_t>(((a * n + b) * n + c) * n + d)];
  };
  // R(d_i, d_j, d_j, d_i) = g_im R^m_{jij}
  double num = 0.0;
  for (int m = 0; m < n; ++m) num += g(i, m) * rat(m, j, i, j);
  const double gram = g(i, i) * g(j, j) - g(i, j) * g(i, j);
  if (gram <= 1e-14) throw std::domain_error("fd_sectional_curvature: degenerate plane");
  return num / gram;
}

/// Two-dimensional flatness criterion |G - div(V)|, where div carries the
/// codifferential sign, div(V) = -(1/sqrt(det g)) d_i (sqrt(det g) V^i).
/// With that sign G = div(V) holds exactly when the vectorial connection is
/// flat: expanding <R^nabla(e_1,e_2)e_1, e_2> in an orthonormal frame gives
/// -G - sum_i <nabla^g_{e_i} V, e_i>, and the criterion is its vanishing.
inline double gauss_divergence_criterion(const MetricPatch& patch, const VectorFieldPatch& field,
                                         const VectorN& p) {
  if (patch.dim != 2)
    throw std::invalid_argument("gauss_divergence_criterion: dimension 2 required");
  detail::require_stencil(patch, p, 2);
  const double gauss = fd_sectional_curvature(patch, p, 0, 1);
  auto weighted = [&](const VectorN& q) -> VectorN {
    return std::sqrt(patch.metric(q).determinant()) * field.components(q);
  };
  double div = 0.0;
  for (int i = 0; i < 2; ++i)
    div -= detail::central_diff(weighted, p, i, patch.fd_step)(i);
  div /= std::sqrt(patch.metric(p).determinant());
  return std::abs(gauss - div);
}

/// Identity relating the curvatures of the vectorial-torsion connection and
/// its torsion-free conformal companion (theta = -V^flat):
///   R^nabla(X,Y)Z = R^w(X,Y)Z + dV(X,Y) Z.
/// Holds for every metric and field; the residual is finite-difference noise.
/// In particular the connection is flat exactly when dV = 0 and R^w = 0.
inline double weyl_relation_residual(const MetricPatch& patch, const VectorFieldPatch& field,
                                     const VectorN& p) {
  detail::require_stencil(patch, p, 2);
  const int n = patch.dim;
  const double h = patch.fd_step;
  const auto r_nabla = detail::connection_curvature(
      [&patch, &field](const VectorN& q) { return detail::vectorial_connection(patch, field, q); },
      n, p, h);
  const auto r_weyl = detail::connection_curvature(
      [&patch, &field](const VectorN& q) { return detail::weyl_connection(patch, field, q); }, n,
      p, h);
  const Matrix dv = detail::dv_two_form(patch, field, p);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const std::size_t idx = static_cast<std::size_t>(((i * n + j) * n + k) * n + l);
          double s = r_nabla[idx] - r_weyl[idx];
          if (i == j) s -= dv(k, l);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

/// |dV(X,Y) - (<nabla^g_X V, Y> - <nabla^g_Y V, X>)|: the closedness of the
/// dual 1-form is equivalent to symmetry of the covariant derivative.
inline double dv_symmetry_residual(const MetricPatch& patch, const VectorFieldPatch& field,
                                   const VectorN& p) {
  detail::require_stencil(patch, p, 2);
  const int n = patch.dim;
  const Matrix g = patch.metric(p);
  const Matrix nv = detail::covariant_derivative(field, christoffels(patch, p), p,
                                                 patch.fd_step, n);
  const Matrix dv = detail::dv_two_form(patch, field, p);
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const double sym = (g * nv.col(k))(l) - (g * nv.col(l))(k);
      worst = std::max(worst, std::abs(dv(k, l) - sym));
    }
  return worst;
}

}  // namespace torsionlab::vectorial
