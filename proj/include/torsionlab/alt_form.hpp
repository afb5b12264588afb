#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "torsionlab/multi_index.hpp"

namespace torsionlab {

using VectorN = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline VectorN frame_vector(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("frame_vector: index out of range");
  VectorN v = VectorN::Zero(n);
  v(i - 1) = 1.0;
  return v;
}

/// Sparse alternating k-form on R^n, expressed in a fixed orthonormal frame.
/// Components are keyed by strictly increasing multi-indices (1-based).
/// Conventions used throughout:
///   - inner product: <a,b> = sum over increasing I of a_I b_I (no 1/k!),
///   - interior product: (x . a)(Y_1,...,Y_{k-1}) = a(x, Y_1, ..., Y_{k-1}),
///   - Hodge star: *(e_I) = sign(I, I^c) e_{I^c} with e_1 ^ ... ^ e_n positive.
/// Degrees above n are permitted and are identically zero (no valid keys).
class AltForm {
 public:
  AltForm() = default;

  AltForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1) throw std::invalid_argument("AltForm: dimension must be positive");
    if (degree < 0) throw std::invalid_argument("AltForm: negative degree");
  }

  static AltForm basis(int dim, MultiIndex indices) {
    AltForm f(dim, static_cast<int>(indices.size()));
    f.add_term(std::move(indices), 1.0);
    return f;
  }

  static AltForm basis(int dim, std::initializer_list<int> indices) {
    return basis(dim, MultiIndex(indices));
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, double>& terms() const { return terms_; }

  /// Accumulate a coefficient on an index tuple given in any order; the tuple
  /// is canonicalized with its permutation sign, repeated indices contribute 0.
  void add_term(MultiIndex indices, double coeff) {
    if (static_cast<int>(indices.size()) != degree_)
      throw std::invalid_argument("AltForm::add_term: index length != degree");
    for (int i : indices)
      if (i < 1 || i > dim_)
        throw std::invalid_argument("AltForm::add_term: frame index out of range");
    auto [sign, key] = canonicalize(std::move(indices));
    if (sign == 0 || coeff == 0.0) return;
    terms_[key] += sign * coeff;
  }

  /// Coefficient on an index tuple in any order (0 when absent or repeated).
  double coeff(MultiIndex indices) const {
    auto [sign, key] = canonicalize(std::move(indices));
    if (sign == 0) return 0.0;
    auto it = terms_.find(key);
    return it == terms_.end() ? 0.0 : sign * it->second;
  }

  double coeff(std::initializer_list<int> indices) const { return coeff(MultiIndex(indices)); }

  AltForm& operator+=(const AltForm& other) {
    require_compatible(other);
    for (const auto& [key, c] : other.terms_) terms_[key] += c;
    return *this;
  }

  AltForm& operator-=(const AltForm& other) {
    require_compatible(other);
    for (const auto& [key, c] : other.terms_) terms_[key] -= c;
    return *this;
  }

  AltForm& operator*=(double s) {
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }

  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(AltForm a, double s) { return a *= s; }
  friend AltForm operator*(double s, AltForm a) { return a *= s; }

  /// Evaluation on vectors: a(v_1,...,v_k) = sum_I a_I det(v_q[I_p]).
  double evaluate(std::span<const VectorN> args) const {
    if (static_cast<int>(args.size()) != degree_)
      throw std::invalid_argument("AltForm::evaluate: wrong number of arguments");
    for (const VectorN& v : args)
      if (v.size() != dim_) throw std::invalid_argument("AltForm::evaluate: dimension mismatch");
    const int k = degree_;
    double out = 0.0;
    Matrix m(k, k);
    for (const auto& [key, c] : terms_) {
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
          m(p, q) = args[static_cast<std::size_t>(q)](key[static_cast<std::size_t>(p)] - 1);
      out += c * (k == 0 ? 1.0 : m.determinant());
    }
    return out;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  void require_compatible(const AltForm& other) const {
    if (dim_ != other.dim_ || degree_ != other.degree_)
      throw std::invalid_argument("AltForm: dimension or degree mismatch");
  }

  int dim_ = 1;
  int degree_ = 0;
  std::map<MultiIndex, double> terms_;
};

inline AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  AltForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      MultiIndex merged = ka;
      merged.insert(merged.end(), kb.begin(), kb.end());
      out.add_term(std::move(merged), ca * cb);
    }
  }
  return out;
}

inline AltForm interior(const VectorN& x, const AltForm& a) {
  if (x.size() != a.dim()) throw std::invalid_argument("interior: dimension mismatch");
  if (a.degree() == 0)
    throw std::invalid_argument("interior: degree-0 form has no interior product");
  AltForm out(a.dim(), a.degree() - 1);
  for (const auto& [key, c] : a.terms()) {
    for (std::size_t p = 0; p < key.size(); ++p) {
      const double xp = x(key[p] - 1);
      if (xp == 0.0) continue;
      MultiIndex rest;
      rest.reserve(key.size() - 1);
      for (std::size_t q = 0; q < key.size(); ++q)
        if (q != p) rest.push_back(key[q]);
      out.add_term(std::move(rest), ((p % 2 == 0) ? 1.0 : -1.0) * xp * c);
    }
  }
  return out;
}

inline double inner(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    throw std::invalid_argument("inner: dimension or degree mismatch");
  // iterate the sparser operand
  const AltForm& lead = a.terms().size() <= b.terms().size() ? a : b;
  const AltForm& other = a.terms().size() <= b.terms().size() ? b : a;
  double s = 0.0;
  for (const auto& [key, c] : lead.terms()) {
    auto it = other.terms().find(key);
    if (it != other.terms().end()) s += c * it->second;
  }
  return s;
}

inline double norm2(const AltForm& a) { return inner(a, a); }
inline double norm(const AltForm& a) { return std::sqrt(norm2(a)); }

/// Hodge star for the oriented orthonormal frame; `orientation` = -1 selects
/// the opposite orientation of e_1 ^ ... ^ e_n.
inline AltForm hodge(const AltForm& a, int orientation = 1) {
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("hodge: orientation must be +1 or -1");
  const int n = a.dim();
  if (a.degree() > n) return AltForm(n, n - a.degree() < 0 ? 0 : n - a.degree());
  AltForm out(n, n - a.degree());
  for (const auto& [key, c] : a.terms()) {
    MultiIndex comp = complement(key, n);
    MultiIndex joined = key;
    joined.insert(joined.end(), comp.begin(), comp.end());
    const int s = permutation_sign(joined);
    out.add_term(std::move(comp), orientation * s * c);
  }
  return out;
}

inline double max_abs_diff(const AltForm& a, const AltForm& b) {
  double m = 0.0;
  for (const auto& [key, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(key)));
  for (const auto& [key, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(key)));
  return m;
}

inline bool approx_equal(const AltForm& a, const AltForm& b, double tol) {
  return a.dim() == b.dim() && a.degree() == b.degree() && max_abs_diff(a, b) <= tol;
}

}  // namespace torsionlab
