#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "torsionlab/linalg.hpp"
#include "torsionlab/rng.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab::s7 {

using Vector8 = Eigen::Matrix<double, 8, 1>;
using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Matrix8i = Eigen::Matrix<int, 8, 8>;

/// Octonion multiplication on the ordered basis (1, e_1, ..., e_7):
/// e_a e_b = e_c cyclically on each of the seven lines below, e_i^2 = -1.
/// This is the index-doubling convention, fixed once for the whole library.
inline constexpr std::array<std::array<int, 3>, 7> kOctonionLines{{
    {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};

/// The seven generators of the rank-8 real Clifford module: kappa_i is left
/// multiplication by e_i on the octonions. Integer matrices, exactly skew,
/// with kappa_i kappa_j + kappa_j kappa_i = -2 delta_ij Id.
struct CliffordRep7 {
  std::array<Matrix8i, 7> kappa_int;
  std::array<Matrix8, 7> kappa;
};

namespace detail {

struct OctonionProduct {
  int sign;
  int index;  // 0 = real unit
};

inline OctonionProduct octonion_multiply(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (const auto& line : kOctonionLines) {
    const int x = line[0], y = line[1], z = line[2];
    if (a == x && b == y) return {1, z};
    if (a == y && b == z) return {1, x};
    if (a == z && b == x) return {1, y};
    if (a == y && b == x) return {-1, z};
    if (a == z && b == y) return {-1, x};
    if (a == x && b == z) return {-1, y};
  }
  throw std::logic_error("octonion_multiply: index pair not covered");
}

}  // namespace detail

inline CliffordRep7 build_clifford7() {
  CliffordRep7 rep;
  for (int i = 1; i <= 7; ++i) {
    Matrix8i k = Matrix8i::Zero();
    for (int q = 0; q < 8; ++q) {
      const auto p = detail::octonion_multiply(i, q);
      k(p.index, q) = p.sign;
    }
    rep.kappa_int[static_cast<std::size_t>(i - 1)] = k;
    rep.kappa[static_cast<std::size_t>(i - 1)] = k.cast<double>();
  }
  return rep;
}

/// Exact integer residual of the Clifford relations over all 49 pairs:
/// max |kappa_i kappa_j + kappa_j kappa_i + 2 delta_ij Id|.
inline int clifford_relation_residual(const CliffordRep7& rep) {
  int worst = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Matrix8i acrel =
          rep.kappa_int[static_cast<std::size_t>(i)] * rep.kappa_int[static_cast<std::size_t>(j)] +
          rep.kappa_int[static_cast<std::size_t>(j)] * rep.kappa_int[static_cast<std::size_t>(i)];
      if (i == j) acrel += 2 * Matrix8i::Identity();
      worst = std::max(worst, acrel.cwiseAbs().maxCoeff());
    }
  return worst;
}

/// Unit spinor; the base point of all pointwise computations.
struct SpherePoint {
  Vector8 x;

  static SpherePoint from(const Vector8& v, double tol = 1e-12) {
    if (std::abs(v.norm() - 1.0) > tol)
      throw std::invalid_argument("SpherePoint: vector is not unit length");
    return SpherePoint{v};
  }

  static SpherePoint normalized(const Vector8& v) {
    const double n = v.norm();
    if (n < 1e-14) throw std::invalid_argument("SpherePoint: cannot normalize zero vector");
    return SpherePoint{v / n};
  }
};

inline SpherePoint north_pole() {
  Vector8 v = Vector8::Zero();
  v(0) = 1.0;
  return SpherePoint{v};
}

inline SpherePoint sample_point(Rng& rng) {
  Vector8 v;
  double n = 0.0;
  do {
    for (int i = 0; i < 8; ++i) v(i) = rng.gaussian();
    n = v.norm();
  } while (n < 1e-12);
  return SpherePoint{v / n};
}

/// The parallel frame V_i(x) = kappa_i x: unit, tangential, pairwise orthogonal.
inline std::array<Vector8, 7> killing_frame(const CliffordRep7& rep, const SpherePoint& p) {
  if (std::abs(p.x.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("killing_frame: point is not on the sphere");
  std::array<Vector8, 7> frame;
  for (int i = 0; i < 7; ++i) frame[static_cast<std::size_t>(i)] = rep.kappa[static_cast<std::size_t>(i)] * p.x;
  return frame;
}

/// Torsion of the connection that parallelizes the V_i, in frame components:
///   T_ijk(x) = 2 <kappa_k kappa_j kappa_i x, x> = -2 <kappa_i kappa_j kappa_k x, x>.
/// The sign is fixed by the standard vector-field bracket, under which
/// [V_i, V_j] = -2 kappa_i kappa_j x and T(V_i,V_j) = -[V_i,V_j]; this is the
/// choice that satisfies 3 dT = 2 sigma_T against finite-difference oracles.
namespace detail {

inline AltForm torsion_from_kappas(const std::array<Matrix8, 7>& kappa, const Vector8& x) {
  AltForm t(7, 3);
  std::array<Vector8, 7> kx;
  for (int k = 0; k < 7; ++k) kx[static_cast<std::size_t>(k)] = kappa[static_cast<std::size_t>(k)] * x;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      const Vector8 kj_ki_x = kappa[static_cast<std::size_t>(j - 1)] * kx[static_cast<std::size_t>(i - 1)];
      for (int k = j + 1; k <= 7; ++k) {
        const double c = 2.0 * (kappa[static_cast<std::size_t>(k - 1)] * kj_ki_x).dot(x);
        if (c != 0.0) t.add_term({i, j, k}, c);
      }
    }
  return t;
}

}  // namespace detail

inline AltForm torsion_at(const CliffordRep7& rep, const SpherePoint& p) {
  return detail::torsion_from_kappas(rep.kappa, p.x);
}

/// Exact flow of the frame field V_k (1-based): x(t) = cos(t) x + sin(t) kappa_k x.
inline SpherePoint flow(const CliffordRep7& rep, const SpherePoint& p, int k, double t) {
  if (k < 1 || k > 7) throw std::invalid_argument("flow: frame index out of range");
  const Vector8 y = std::cos(t) * p.x + std::sin(t) * (rep.kappa[static_cast<std::size_t>(k - 1)] * p.x);
  return SpherePoint{y / y.norm()};
}

/// Closed-form derivative of the coefficient T_ijl along the flow of V_k
/// (all indices 1-based):
///   d/dt T_ijl(x(t))|_0 = -2[<k_i k_j k_l k_k x, x> + <k_i k_j k_l x, k_k x>].
inline double coefficient_derivative(const CliffordRep7& rep, const SpherePoint& p, int i,
                                     int j, int l, int k) {
  for (int idx : {i, j, l, k})
    if (idx < 1 || idx > 7)
      throw std::invalid_argument("coefficient_derivative: index out of range");
  const auto& ki = rep.kappa[static_cast<std::size_t>(i - 1)];
  const auto& kj = rep.kappa[static_cast<std::size_t>(j - 1)];
  const auto& kl = rep.kappa[static_cast<std::size_t>(l - 1)];
  const auto& kk = rep.kappa[static_cast<std::size_t>(k - 1)];
  const Vector8 klx = kl * p.x;
  return -2.0 * ((ki * (kj * (kl * (kk * p.x)))).dot(p.x) + (ki * (kj * klx)).dot(kk * p.x));
}

/// Directional derivatives of the torsion coefficients along each frame
/// direction, as degree-3 forms (closed form, no finite differences).
inline std::vector<AltForm> torsion_coefficient_derivatives(const CliffordRep7& rep,
                                                            const SpherePoint& p) {
  std::vector<AltForm> out;
  out.reserve(7);
  for (int k = 1; k <= 7; ++k) {
    AltForm d(7, 3);
    for (const MultiIndex& key : increasing_indices(7, 3)) {
      const double v = coefficient_derivative(rep, p, key[0], key[1], key[2], k);
      if (v != 0.0) d.add_term(key, v);
    }
    out.push_back(std::move(d));
  }
  return out;
}

/// Same derivatives by central differences along the exact flows; the
/// independent oracle for the closed form above.
inline std::vector<AltForm> torsion_coefficient_derivatives_fd(const CliffordRep7& rep,
                                                               const SpherePoint& p,
                                                               double step = 1e-4) {
  std::vector<AltForm> out;
  out.reserve(7);
  for (int k = 1; k <= 7; ++k) {
    const AltForm plus = torsion_at(rep, flow(rep, p, k, step));
    const AltForm minus = torsion_at(rep, flow(rep, p, k, -step));
    out.push_back(1.0 / (2.0 * step) * (plus - minus));
  }
  return out;
}

/// Residuals of the Levi-Civita description of the frame:
///   nabla^g_{V_i} V_j = kappa_j kappa_i x (i != j),  nabla^g_{V_i} V_i = 0,
/// checked against finite differences of V_j along the exact flow of V_i with
/// tangential projection, plus the reconstruction nabla^g_{V_i}V_j = -T(V_i,V_j)/2.
inline double levi_civita_check(const CliffordRep7& rep, const SpherePoint& p,
                                double step = 1e-6) {
  const AltForm t = torsion_at(rep, p);
  const auto tab = torsion_map_table(t);
  const auto frame = killing_frame(rep, p);
  double worst = 0.0;
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const SpherePoint xp = flow(rep, p, i, step);
      const SpherePoint xm = flow(rep, p, i, -step);
      const Vector8 dv = (rep.kappa[static_cast<std::size_t>(j - 1)] * xp.x -
                          rep.kappa[static_cast<std::size_t>(j - 1)] * xm.x) /
                         (2.0 * step);
      const Vector8 nabla_g = dv - dv.dot(p.x) * p.x;
      if (i == j) {
        worst = std::max(worst, nabla_g.cwiseAbs().maxCoeff());
        continue;
      }
      const Vector8 closed = rep.kappa[static_cast<std::size_t>(j - 1)] *
                             (rep.kappa[static_cast<std::size_t>(i - 1)] * p.x);
      worst = std::max(worst, (nabla_g - closed).cwiseAbs().maxCoeff());
      // -T(V_i,V_j)/2 expressed back in ambient components
      Vector8 recon = Vector8::Zero();
      const VectorN& tij = tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      for (int m = 0; m < 7; ++m) recon -= 0.5 * tij(m) * frame[static_cast<std::size_t>(m)];
      worst = std::max(worst, (nabla_g - recon).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

/// Rotation of the frame index space, W_a = sum_i A_ia V_i.
struct FrameRotation {
  Eigen::Matrix<double, 7, 7> a;

  static FrameRotation from(const Matrix& m, double tol = 1e-10) {
    if (m.rows() != 7 || m.cols() != 7)
      throw std::invalid_argument("FrameRotation: matrix must be 7x7");
    if ((m.transpose() * m - Matrix::Identity(7, 7)).cwiseAbs().maxCoeff() > tol)
      throw std::invalid_argument("FrameRotation: matrix is not orthogonal");
    if (m.determinant() < 0.0)
      throw std::invalid_argument("FrameRotation: determinant must be +1");
    FrameRotation r;
    r.a = m;
    return r;
  }
};

/// Torsion of the rotated frame W_a = sum_i A_ia V_i, computed from the rotated
/// Clifford generators kappa'_a = sum_i A_ia kappa_i (still a Clifford family).
/// Coincides with the frame transform of torsion_at.
inline AltForm frame_family(const CliffordRep7& rep, const FrameRotation& rot,
                            const SpherePoint& p) {
  std::array<Matrix8, 7> rotated;
  for (int a = 0; a < 7; ++a) {
    Matrix8 k = Matrix8::Zero();
    for (int i = 0; i < 7; ++i) k += rot.a(i, a) * rep.kappa[static_cast<std::size_t>(i)];
    rotated[static_cast<std::size_t>(a)] = k;
  }
  return detail::torsion_from_kappas(rotated, p.x);
}

}  // namespace torsionlab::s7
