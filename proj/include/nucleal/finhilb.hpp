#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>
#include <unsupported/Eigen/KroneckerProduct>

#include "nucleal/core/error.hpp"
#include "nucleal/core/rng.hpp"

/// Finite-dimensional Hilbert spaces. A map H -> K is a dim K x dim H
/// complex matrix acting on column vectors.
namespace nucleal::finhilb {

template <class T = double>
using CMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <class T = double>
using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
template <class T = double>
using RVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
void require_finite(const CMatrix<T>& a) {
  if (!a.allFinite()) throw InvariantError("matrix has non-finite entries");
}

template <class T>
CMatrix<T> adjoint(const CMatrix<T>& f) {
  return f.adjoint();
}

/// Linear in the first variable.
template <class T>
std::complex<T> inner(const CVector<T>& x, const CVector<T>& y) {
  if (x.size() != y.size()) throw ShapeError("inner product of vectors of different length");
  std::complex<T> s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += x(i) * std::conj(y(i));
  return s;
}

/// Sum over basis pairs of <f e_i, e'_j><e'_j, g e_i>.
template <class T>
std::complex<T> hs_inner(const CMatrix<T>& f, const CMatrix<T>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeError("Hilbert-Schmidt inner product needs equal shapes");
  std::complex<T> s = 0;
  for (Eigen::Index i = 0; i < f.cols(); ++i) {
    for (Eigen::Index j = 0; j < f.rows(); ++j) s += f(j, i) * std::conj(g(j, i));
  }
  return s;
}

template <class T>
T hs_norm(const CMatrix<T>& f) {
  return std::sqrt(std::max(T(0), hs_inner(f, f).real()));
}

/// conj(H) x K -> Hom(H, K); e_i x e_j goes to the map e_i |-> e_j.
template <class T>
CMatrix<T> u_map(const CVector<T>& v, Eigen::Index dim_h, Eigen::Index dim_k) {
  if (v.size() != dim_h * dim_k) throw ShapeError("vector length is not dim H * dim K");
  CMatrix<T> f(dim_k, dim_h);
  for (Eigen::Index i = 0; i < dim_h; ++i) {
    for (Eigen::Index j = 0; j < dim_k; ++j) f(j, i) = v(i * dim_k + j);
  }
  return f;
}

template <class T>
CVector<T> u_inverse(const CMatrix<T>& f) {
  CVector<T> v(f.rows() * f.cols());
  for (Eigen::Index i = 0; i < f.cols(); ++i) {
    for (Eigen::Index j = 0; j < f.rows(); ++j) v(i * f.rows() + j) = f(j, i);
  }
  return v;
}

template <class T>
T hermitian_defect(const CMatrix<T>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <class T>
struct Eigensystem {
  RVector<T> values;  // ascending
  CMatrix<T> vectors;  // columns
};

/// Cyclic Jacobi: sweep every (p, q) until the off-diagonal mass drops
/// below 1e-12 relative to the matrix, at most 100 sweeps.
template <class T>
Eigensystem<T> hermitian_eig(const CMatrix<T>& input, T tolerance = T(1e-9)) {
  if (input.rows() != input.cols()) throw ShapeError("eigensolver needs a square matrix");
  require_finite(input);
  const Eigen::Index n = input.rows();
  Eigensystem<T> out;
  if (n == 0) return out;
  const T scale = std::max(T(1), input.cwiseAbs().maxCoeff());
  if (hermitian_defect(input) > tolerance * scale) throw PreconditionError("matrix is not Hermitian");
  CMatrix<T> a = (input + input.adjoint()) / T(2);
  CMatrix<T> v = CMatrix<T>::Identity(n, n);
  auto off = [&] {
    T s = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        if (p != q) s += std::norm(a(p, q));
      }
    }
    return std::sqrt(s);
  };
  const T stop = T(1e-12) * std::max(T(1), a.norm());
  for (int sweep = 0; sweep < 100 && off() >= stop; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == std::complex<T>(0)) continue;
        Eigen::JacobiRotation<std::complex<T>> j;
        j.makeJacobi(std::real(a(p, p)), a(p, q), std::real(a(q, q)));
        a.applyOnTheLeft(p, q, j.adjoint());
        a.applyOnTheRight(p, q, j);
        v.applyOnTheRight(p, q, j);
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x).real() < a(y, y).real(); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

/// The unique positive B with B^2 = a; eigenvalues down to -tolerance
/// are clamped to zero.
template <class T>
CMatrix<T> positive_sqrt(const CMatrix<T>& a, T tolerance = T(1e-9)) {
  auto es = hermitian_eig(a, tolerance);
  const T scale = std::max(T(1), a.size() ? a.cwiseAbs().maxCoeff() : T(0));
  RVector<T> roots(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    if (es.values(k) < -tolerance * scale) throw PreconditionError("matrix has a negative eigenvalue");
    roots(k) = std::sqrt(std::max(T(0), es.values(k)));
  }
  return es.vectors * roots.template cast<std::complex<T>>().asDiagonal() * es.vectors.adjoint();
}

/// |A| = sqrt(A* A).
template <class T>
CMatrix<T> abs_op(const CMatrix<T>& a) {
  return positive_sqrt<T>(a.adjoint() * a);
}

template <class T>
std::complex<T> trace(const CMatrix<T>& a) {
  if (a.rows() != a.cols()) throw ShapeError("trace needs a square matrix");
  return a.trace();
}

template <class T>
T trace_norm(const CMatrix<T>& a) {
  return trace(abs_op(a)).real();
}

/// Polar decomposition h = W |h| with W = h pinv(|h|), acting as the
/// identity on the kernel of |h|.
template <class T>
std::pair<CMatrix<T>, CMatrix<T>> polar(const CMatrix<T>& h, T cutoff = T(1e-10)) {
  if (h.rows() != h.cols()) throw ShapeError("polar decomposition needs a square matrix");
  const Eigen::Index n = h.rows();
  auto es = hermitian_eig<T>(h.adjoint() * h);
  CMatrix<T> w = CMatrix<T>::Zero(n, n);
  CMatrix<T> modulus = CMatrix<T>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const T s = std::sqrt(std::max(T(0), es.values(k)));
    const CVector<T> vk = es.vectors.col(k);
    modulus += std::complex<T>(s) * vk * vk.adjoint();
    if (s > cutoff) {
      w += (h * vk / std::complex<T>(s)) * vk.adjoint();
    } else {
      w += vk * vk.adjoint();
    }
  }
  return {w, modulus};
}

/// h = g f with f = |h|^(1/2) and g = W |h|^(1/2).
template <class T>
std::pair<CMatrix<T>, CMatrix<T>> hs_factorize(const CMatrix<T>& h) {
  auto [w, modulus] = polar(h);
  CMatrix<T> root = positive_sqrt(modulus);
  return {root, w * root};
}

template <class T>
CMatrix<T> tensor(const CMatrix<T>& f, const CMatrix<T>& g) {
  return Eigen::kroneckerProduct(f, g);
}

/// C^a x C^b -> C^b x C^a.
template <class T = double>
CMatrix<T> symmetry(Eigen::Index a, Eigen::Index b) {
  CMatrix<T> s = CMatrix<T>::Zero(a * b, a * b);
  for (Eigen::Index x = 0; x < a; ++x) {
    for (Eigen::Index y = 0; y < b; ++y) s(y * a + x, x * b + y) = 1;
  }
  return s;
}

/// Entrywise closeness relative to the larger magnitude.
template <class T>
bool approx_equal(const CMatrix<T>& f, const CMatrix<T>& g, T tol) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  if (f.size() == 0) return true;
  const T scale = std::max({T(1), f.cwiseAbs().maxCoeff(), g.cwiseAbs().maxCoeff()});
  return (f - g).cwiseAbs().maxCoeff() <= tol * scale;
}

template <class T>
CMatrix<T> random_matrix(core::Lcg& rng, Eigen::Index rows, Eigen::Index cols) {
  CMatrix<T> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = {T(rng.uniform(-1, 1)), T(rng.uniform(-1, 1))};
  }
  return m;
}

template <class T>
CMatrix<T> random_unitary(core::Lcg& rng, Eigen::Index n) {
  Eigen::HouseholderQR<CMatrix<T>> qr(random_matrix<T>(rng, n, n));
  return qr.householderQ() * CMatrix<T>::Identity(n, n);
}

/// Objects are dimensions.
class Category {
 public:
  using Object = int;
  using Morphism = CMatrix<double>;
  using Scalar = std::complex<double>;

  explicit Category(double tol = 1e-10) : tol_(tol) {}

  double tolerance() const { return tol_; }
  std::string name() const { return "finhilb"; }
  Object unit() const { return 1; }
  Object tensor(Object a, Object b) const { return a * b; }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return finhilb::tensor(f, g); }
  Object conj(Object a) const { return a; }
  Morphism conj(const Morphism& f) const { return f.conjugate(); }
  bool same(Object a, Object b) const { return a == b; }
  Object source(const Morphism& f) const { return static_cast<int>(f.cols()); }
  Object target(const Morphism& f) const { return static_cast<int>(f.rows()); }
  Morphism identity(Object a) const { return Morphism::Identity(a, a); }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (g.cols() != f.rows()) throw ShapeError("cannot compose maps of mismatched dimension");
    return g * f;
  }
  Morphism symmetry(Object a, Object b) const { return finhilb::symmetry<double>(a, b); }
  Morphism star(const Morphism& f) const { return f.adjoint(); }
  Morphism iota() const { return identity(1); }
  Morphism iota_inv() const { return identity(1); }
  bool equal(const Morphism& f, const Morphism& g) const { return approx_equal(f, g, tol_); }
  std::string describe(const Morphism& f) const;
  std::string describe(Object a) const { return "C^" + std::to_string(a); }
  Scalar to_scalar(const Morphism& f) const {
    if (f.rows() != 1 || f.cols() != 1) throw ShapeError("scalar needs a 1x1 matrix");
    return f(0, 0);
  }
  bool scalar_equal(Scalar a, Scalar b) const { return std::abs(a - b) <= tol_ * std::max({1.0, std::abs(a), std::abs(b)}); }
  Scalar scalar_star(Scalar a) const { return std::conj(a); }
  Scalar scalar_mul(Scalar a, Scalar b) const { return a * b; }
  std::string describe_scalar(Scalar a) const;

  Object sample_object(core::Lcg& rng, int max_size) const { return rng.range(0, std::max(0, max_size)); }
  Morphism sample_morphism(core::Lcg& rng, Object a, Object b) const { return random_matrix<double>(rng, b, a); }
  Morphism sample_nuclear(core::Lcg& rng, Object a, Object b) const { return sample_morphism(rng, a, b); }
  std::tuple<Object, Morphism, Morphism> sample_iso(core::Lcg& rng, Object b) const {
    auto u = random_unitary<double>(rng, b);
    return {b, u, u.adjoint()};
  }

  /// Every finite-dimensional map is Hilbert-Schmidt.
  bool is_nuclear(const Morphism&) const { return true; }
  Morphism theta(const Morphism& f) const { return u_inverse(f); }
  Morphism theta_inv(const Morphism& m, Object a, Object b) const {
    if (m.cols() != 1) throw ShapeError("theta inverse needs a map from C^1");
    return u_map<double>(m.col(0), a, b);
  }
  std::optional<std::pair<Morphism, Morphism>> factorize(const Morphism& h) const {
    if (h.rows() != h.cols()) return std::make_pair(identity(static_cast<int>(h.cols())), h);
    return hs_factorize(h);
  }

  bool in_trace_class(const Morphism& f) const { return f.rows() == f.cols(); }
  Scalar trace(const Morphism& f) const { return finhilb::trace(f); }
  Morphism sample_trace_class(core::Lcg& rng, Object a) const { return sample_morphism(rng, a, a); }

 private:
  double tol_;
};

}  // namespace nucleal::finhilb
